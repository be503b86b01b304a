#include "instance.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace embrace {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::uint64_t parse_number(const std::string& tok, const char* what) {
    std::uint64_t value = 0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw Error(ErrorCode::parse_error, std::string("bad ") + what + " '" + tok + "'");
    }
    return value;
}

std::vector<ElementId> parse_id_list(const std::vector<std::string>& tokens,
                                     std::size_t from) {
    std::vector<ElementId> ids;
    ids.reserve(tokens.size() - from);
    for (std::size_t i = from; i < tokens.size(); ++i) {
        ids.push_back(static_cast<ElementId>(parse_number(tokens[i], "element id")));
    }
    return ids;
}

}  // namespace

Digraph parse_digraph(const std::vector<std::string>& lines) {
    std::size_t n = 0;
    std::size_t expected = 0;
    bool saw_header = false;
    std::vector<Arc> arcs;
    for (const std::string& raw : lines) {
        std::vector<std::string> tokens = tokenize(raw);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (!saw_header) {
            if (tokens.size() != 3 || tokens[0] != "digraph") {
                throw Error(ErrorCode::parse_error,
                            "expected header 'digraph <n> <m>', got: " + raw);
            }
            n = parse_number(tokens[1], "vertex count");
            expected = parse_number(tokens[2], "arc count");
            arcs.reserve(expected);
            saw_header = true;
            continue;
        }
        if (tokens.size() != 2) {
            throw Error(ErrorCode::parse_error, "expected arc line '<tail> <head>', got: " + raw);
        }
        arcs.push_back(Arc{static_cast<VertexId>(parse_number(tokens[0], "vertex")),
                           static_cast<VertexId>(parse_number(tokens[1], "vertex"))});
    }
    if (!saw_header) throw Error(ErrorCode::parse_error, "missing 'digraph <n> <m>' header");
    if (arcs.size() != expected) {
        throw Error(ErrorCode::parse_error,
                    "header promises " + std::to_string(expected) + " arcs, found " +
                        std::to_string(arcs.size()));
    }
    try {
        return Digraph(n, std::move(arcs));
    } catch (const Error& e) {
        throw Error(ErrorCode::parse_error, e.what());
    }
}

std::string write_digraph(const Digraph& d) {
    std::ostringstream os;
    os << "digraph " << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) os << a.tail << ' ' << a.head << '\n';
    return os.str();
}

Instance parse_instance(const std::vector<std::string>& lines) {
    std::vector<std::string> payload_lines;
    std::optional<Anchor> anchor;
    std::optional<BasisSet> A, B;
    std::optional<std::uint64_t> seed;
    std::optional<Instance::Kind> kind;

    for (const std::string& raw : lines) {
        std::vector<std::string> tokens = tokenize(raw);
        if (tokens.empty() || tokens[0][0] == '#') continue;

        if (!kind) {
            if (tokens[0] == "digraph") {
                kind = Instance::Kind::graphic;
            } else if (tokens[0] == "points") {
                kind = Instance::Kind::affine;
            } else if (tokens[0] == "ground") {
                kind = Instance::Kind::explicit_om;
            } else {
                throw Error(ErrorCode::parse_error,
                            "instance must start with a 'digraph', 'points' or 'ground' "
                            "header, got: " +
                                raw);
            }
            payload_lines.push_back(raw);
            continue;
        }

        if (tokens[0] == "anchor") {
            if (anchor) throw Error(ErrorCode::parse_error, "duplicate anchor line");
            if (tokens.size() == 3 && tokens[1] == "arc") {
                anchor = Anchor::of_element(
                    static_cast<ElementId>(parse_number(tokens[2], "arc id")));
            } else if (tokens.size() == 3) {
                anchor = Anchor::of_vertices(
                    static_cast<VertexId>(parse_number(tokens[1], "vertex")),
                    static_cast<VertexId>(parse_number(tokens[2], "vertex")));
            } else if (tokens.size() == 2) {
                anchor = Anchor::of_element(
                    static_cast<ElementId>(parse_number(tokens[1], "element id")));
            } else {
                throw Error(ErrorCode::parse_error, "bad anchor line: " + raw);
            }
            continue;
        }
        if (tokens[0] == "basis") {
            if (tokens.size() < 2 || (tokens[1] != "A" && tokens[1] != "B")) {
                throw Error(ErrorCode::parse_error, "bad basis line: " + raw);
            }
            std::optional<BasisSet>& slot = tokens[1] == "A" ? A : B;
            if (slot) throw Error(ErrorCode::parse_error, "duplicate basis " + tokens[1]);
            slot = BasisSet(parse_id_list(tokens, 2));
            continue;
        }
        if (tokens[0] == "seed") {
            if (seed || tokens.size() != 2) {
                throw Error(ErrorCode::parse_error, "bad seed line: " + raw);
            }
            seed = parse_number(tokens[1], "seed");
            continue;
        }
        payload_lines.push_back(raw);
    }

    if (!kind) throw Error(ErrorCode::parse_error, "empty instance");
    if (!anchor) throw Error(ErrorCode::parse_error, "missing anchor line");
    if (!A || !B) throw Error(ErrorCode::parse_error, "missing basis A or basis B line");

    std::variant<ExplicitOM, Digraph, PointConfiguration> payload;
    switch (*kind) {
        case Instance::Kind::graphic: {
            Digraph d = parse_digraph(payload_lines);
            if (anchor->is_vertex_pair() &&
                (anchor->source() >= d.vertex_count() || anchor->target() >= d.vertex_count())) {
                throw Error(ErrorCode::parse_error, "anchor vertex out of range");
            }
            if (anchor->is_element() && anchor->element() >= d.arc_count()) {
                throw Error(ErrorCode::parse_error, "anchor arc out of range");
            }
            payload = std::move(d);
            break;
        }
        case Instance::Kind::affine: {
            if (!anchor->is_element()) {
                throw Error(ErrorCode::parse_error, "affine instances take a point anchor");
            }
            // parse_points owns the anchor line of its own format.
            payload_lines.push_back("anchor " + std::to_string(anchor->element()));
            payload = parse_points(payload_lines);
            break;
        }
        case Instance::Kind::explicit_om: {
            if (!anchor->is_element()) {
                throw Error(ErrorCode::parse_error, "explicit instances take an element anchor");
            }
            ExplicitOM om = parse_explicit_om(payload_lines);
            if (anchor->element() >= om.ground_size) {
                throw Error(ErrorCode::parse_error, "anchor element out of range");
            }
            payload = std::move(om);
            break;
        }
    }
    return Instance{*kind, std::move(payload), *anchor, std::move(*A), std::move(*B), seed};
}

Instance parse_instance_text(const std::string& text) {
    return parse_instance(split_lines(text));
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance_text(buffer.str());
}

void write_instance_file(const Instance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path + "'");
    out << instance.to_text();
    if (!out) throw Error(ErrorCode::io_error, "failed writing '" + path + "'");
}

std::unique_ptr<OrientedMatroidOracle> Instance::make_oracle() const {
    switch (kind) {
        case Kind::graphic:
            return std::make_unique<GraphicOracle>(digraph(), anchor);
        case Kind::affine:
            return std::make_unique<AffineOracle>(points());
        case Kind::explicit_om:
            return std::make_unique<ExplicitOracle>(explicit_circuits(), anchor.element());
    }
    throw Error(ErrorCode::internal_error, "unreachable instance kind");
}

std::size_t Instance::ground_size() const {
    switch (kind) {
        case Kind::graphic:
            return digraph().arc_count();
        case Kind::affine:
            return points().size();
        case Kind::explicit_om:
            return explicit_circuits().ground_size;
    }
    throw Error(ErrorCode::internal_error, "unreachable instance kind");
}

std::string Instance::to_text() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::graphic:
            os << write_digraph(digraph());
            if (anchor.is_vertex_pair()) {
                os << "anchor " << anchor.source() << ' ' << anchor.target() << '\n';
            } else {
                os << "anchor arc " << anchor.element() << '\n';
            }
            break;
        case Kind::affine:
            os << write_points(points());  // includes its anchor line
            break;
        case Kind::explicit_om:
            os << write_explicit_om(explicit_circuits());
            os << "anchor " << anchor.element() << '\n';
            break;
    }
    auto emit_basis = [&os](const char* name, const BasisSet& basis) {
        os << "basis " << name;
        for (ElementId e : basis) os << ' ' << e;
        os << '\n';
    };
    emit_basis("A", A);
    emit_basis("B", B);
    if (seed) os << "seed " << *seed << '\n';
    return os.str();
}

void validate_instance(const Instance& instance) {
    std::unique_ptr<OrientedMatroidOracle> oracle = instance.make_oracle();
    for (const auto& [name, basis] : {std::pair<const char*, const BasisSet&>{"A", instance.A},
                                      {"B", instance.B}}) {
        if (!oracle->is_basis(basis)) {
            throw Error(ErrorCode::not_a_basis, std::string("basis ") + name + " is not a basis");
        }
        if (!oracle->is_embracing(basis)) {
            throw Error(ErrorCode::not_embracing,
                        std::string("basis ") + name + " is not embracing");
        }
    }
}

std::string instance_fingerprint(const Instance& instance) {
    const std::string text = instance.to_text();
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace embrace
