#pragma once

// Algebra spec files: a small key/value format with sections
//   [field] conductor = N
//   [generators] x = 1
//   [params] q = "z6"
//   [[relations]] expr = "x*y - q*y*x"
//   [meta] hilbert = "...", label = "...", order = "z,y,x"
//   [[autos]] name = "tau"  map = { x = "z", y = "x", z = "y" }

#include "ozonelab/ncalg.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ozonelab::spec {

/// An automorphism given by generator-name -> image-expression pairs.
struct AutoSpec {
    std::string name;
    std::vector<std::pair<std::string, std::string>> images;
};

struct SpecFile {
    nc::AlgebraPresentation presentation;
    std::optional<int> conductor;
    /// Generator precedence, smallest first; empty means declaration order.
    std::vector<std::string> order;
    std::vector<AutoSpec> autos;
    /// Parameter expressions as written.
    std::vector<std::pair<std::string, std::string>> params;
    /// Relation expressions as written.
    std::vector<std::string> relation_texts;
};

/// Throws SyntaxError (with the byte offset) or InvalidPresentation.
SpecFile parse_spec(std::string_view text);
/// A file holding only [[autos]] entries.
std::vector<AutoSpec> parse_autos(std::string_view text);
/// Reads and parses a file; throws InvalidPresentation when it cannot be read.
SpecFile load_spec(const std::string& path);
std::string read_file(const std::string& path);

/// Serializes so that parse_spec(emit_spec(s)) has the same presentation.
std::string emit_spec(const SpecFile& s);

}  // namespace ozonelab::spec
