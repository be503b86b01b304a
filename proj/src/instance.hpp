#pragma once

// Self-contained audit instances: a payload in one of the three
// representations, an anchor, and the two embracing bases under test,
// all round-tripping through a line-oriented text format. The payload
// header names the representation (`digraph`, `points`, `ground`).

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "affine.hpp"
#include "core.hpp"
#include "digraph.hpp"
#include "explicit_om.hpp"
#include "oracle.hpp"

namespace embrace {

struct Instance {
    enum class Kind { graphic, affine, explicit_om };

    Kind kind = Kind::explicit_om;
    std::variant<ExplicitOM, Digraph, PointConfiguration> payload;
    Anchor anchor;
    BasisSet A;
    BasisSet B;
    std::optional<std::uint64_t> seed;

    const Digraph& digraph() const { return std::get<Digraph>(payload); }
    const PointConfiguration& points() const { return std::get<PointConfiguration>(payload); }
    const ExplicitOM& explicit_circuits() const { return std::get<ExplicitOM>(payload); }

    std::unique_ptr<OrientedMatroidOracle> make_oracle() const;
    std::size_t ground_size() const;
    std::string to_text() const;
};

// Digraph payload text: header `digraph <n> <m>`, then m lines
// `<tail> <head>`.
Digraph parse_digraph(const std::vector<std::string>& lines);
std::string write_digraph(const Digraph& d);

// Instance files add to the payload format:
//   anchor <s> <t>      (graphic vertex pair)
//   anchor arc <id>     (graphic arc anchor)
//   anchor <element>    (affine / explicit)
//   basis A <ids...>
//   basis B <ids...>
//   seed <value>        (optional provenance)
Instance parse_instance(const std::vector<std::string>& lines);
Instance parse_instance_text(const std::string& text);
Instance read_instance_file(const std::string& path);
void write_instance_file(const Instance& instance, const std::string& path);

// Re-derives the invariant that A and B are embracing bases; throws
// the oracle's error when they are not.
void validate_instance(const Instance& instance);

// Stable content fingerprint of the instance text, as 16 hex digits.
std::string instance_fingerprint(const Instance& instance);

std::vector<std::string> split_lines(const std::string& text);

}  // namespace embrace
