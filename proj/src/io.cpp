#include "mcluster/io.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace mcluster {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <typename T>
T field(const nlohmann::json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

nlohmann::ordered_json quiver_to_json(const ColouredQuiver& q) {
  nlohmann::ordered_json j;
  j["m"] = q.m();
  j["vertices"] = q.labels();
  auto arrows = nlohmann::ordered_json::array();
  for (const auto& a : q.arrows()) {
    nlohmann::ordered_json arrow;
    arrow["from"] = a.from;
    arrow["to"] = a.to;
    arrow["colour"] = a.colour;
    arrow["mult"] = a.mult;
    arrows.push_back(std::move(arrow));
  }
  j["arrows"] = std::move(arrows);
  return j;
}

ColouredQuiver quiver_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("quiver must be a JSON object");
  const int m = field<int>(j, "m");
  auto labels = field<std::vector<std::string>>(j, "vertices");
  const auto& arrows = j.contains("arrows") ? j.at("arrows") : nlohmann::json::array();
  if (!arrows.is_array()) throw ParseError("'arrows' must be an array");
  if (m < 0) throw ParseError("'m' must be non-negative");
  try {
    ColouredQuiver q(m, std::move(labels));
    for (const auto& a : arrows) {
      const auto mult = a.contains("mult") ? field<Multiplicity>(a, "mult") : Multiplicity{1};
      if (mult < 1) throw ParseError("arrow multiplicity must be positive");
      q.add_arrow(q.index_of(field<std::string>(a, "from")), q.index_of(field<std::string>(a, "to")),
                  field<int>(a, "colour"), mult);
    }
    return q;
  } catch (const UnknownVertexError& e) {
    throw ParseError(std::string("arrow endpoint: ") + e.what());
  } catch (const InvalidQuiverError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_quiver(const ColouredQuiver& q) { return quiver_to_json(q).dump(2) + "\n"; }

ColouredQuiver parse_quiver(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return quiver_from_json(j);
}

std::string quiver_to_dot(const ColouredQuiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (const auto& label : q.labels()) out << "  " << quoted(label) << ";\n";
  for (const auto& a : q.arrows()) {
    for (Multiplicity k = 0; k < a.mult; ++k) {
      out << "  " << quoted(a.from) << " -> " << quoted(a.to) << " [label=\"(" << a.colour << ")\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json angulation_to_json(const Angulation& a) {
  nlohmann::ordered_json j;
  j["m"] = a.polygon().m();
  j["n"] = a.polygon().n();
  auto diagonals = nlohmann::ordered_json::array();
  for (const auto& d : a.diagonals()) diagonals.push_back({d.first(), d.second()});
  j["diagonals"] = std::move(diagonals);
  return j;
}

Angulation angulation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("angulation must be a JSON object");
  const auto pairs = field<std::vector<std::array<int, 2>>>(j, "diagonals");
  try {
    const Polygon p(field<int>(j, "m"), field<int>(j, "n"));
    std::vector<MDiagonal> diagonals;
    for (const auto& [a, b] : pairs) diagonals.emplace_back(a, b);
    return Angulation(p, std::move(diagonals));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const InvalidQuiverError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_angulation(const Angulation& a) { return angulation_to_json(a).dump() + "\n"; }

Angulation parse_angulation(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return angulation_from_json(j);
}

std::string angulation_to_svg(const Angulation& a, const SvgOptions& options) {
  const auto& p = a.polygon();
  const int count = p.vertex_count();
  const double half = options.size / 2.0;
  const double radius = half * 0.85;
  const auto point = [&](int v) {
    const double angle = std::numbers::pi / 2.0 - 2.0 * std::numbers::pi * (v - 1) / count;
    // SVG y grows downwards.
    return std::pair{half + radius * std::cos(angle), half - radius * std::sin(angle)};
  };
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size << "\" height=\""
      << options.size << "\" viewBox=\"0 0 " << options.size << ' ' << options.size << "\">\n";
  out << "  <polygon fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (int v = 1; v <= count; ++v) {
    const auto [x, y] = point(v);
    out << (v > 1 ? " " : "") << x << ',' << y;
  }
  out << "\"/>\n";
  const auto chord = [&](const MDiagonal& d, const char* style) {
    const auto [x1, y1] = point(d.first());
    const auto [x2, y2] = point(d.second());
    out << "  <line class=\"diagonal\" data-diagonal=\"" << to_string(d) << "\" x1=\"" << x1
        << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" " << style << "/>\n";
  };
  for (const auto& d : a.diagonals()) chord(d, "stroke=\"black\" stroke-width=\"2\"");
  if (options.highlight) {
    for (const auto& d : flips(a, *options.highlight)) {
      chord(d, "stroke=\"gray\" stroke-width=\"2\" stroke-dasharray=\"6,4\"");
    }
  }
  for (int v = 1; v <= count; ++v) {
    const auto [x, y] = point(v);
    const double lx = half + (x - half) * 1.1;
    const double ly = half + (y - half) * 1.1;
    out << "  <text x=\"" << lx << "\" y=\"" << ly
        << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string translation_quiver_to_dot(const TranslationQuiver& gamma) {
  std::ostringstream out;
  out << "digraph gamma {\n";
  for (const auto& d : gamma.vertices) out << "  " << quoted(to_string(d)) << ";\n";
  const auto count = static_cast<Index>(gamma.vertices.size());
  for (Index x = 0; x < count; ++x) {
    for (Index y = 0; y < count; ++y) {
      for (int k = 0; k < gamma.arrows(x, y); ++k) {
        out << "  " << quoted(to_string(gamma.vertices[static_cast<std::size_t>(x)])) << " -> "
            << quoted(to_string(gamma.vertices[static_cast<std::size_t>(y)])) << ";\n";
      }
    }
  }
  for (std::size_t x = 0; x < gamma.vertices.size(); ++x) {
    out << "  " << quoted(to_string(gamma.vertices[x])) << " -> "
        << quoted(to_string(gamma.vertices[gamma.tau[x]])) << " [style=dotted];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mcluster
