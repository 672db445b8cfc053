#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mcluster/angulation_quiver.hpp"
#include "mcluster/graph_class.hpp"
#include "mcluster/io.hpp"
#include "mcluster/mutation.hpp"
#include "mcluster/mutation_class.hpp"
#include "mcluster/polygon.hpp"
#include "mcluster/session.hpp"

namespace {

using namespace mcluster;

enum ExitCode { kOk = 0, kParse = 1, kValidation = 2, kUnknownVertex = 3, kUsage = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

int run_mutate(const std::string& input, const std::string& vertex, int count,
               const std::string& format, const std::string& out) {
  ColouredQuiver q;
  try {
    q = parse_quiver(read_file(input));
  } catch (const ParseError& e) {
    std::cerr << "mcluster: " << e.what() << '\n';
    return kParse;
  }
  if (const auto report = validate(q); !report.ok()) {
    std::cerr << "mcluster: input is not a valid coloured quiver (monochromatic="
              << report.monochromatic << " symmetric=" << report.symmetric
              << " loopless=" << report.loopless << ")\n";
    return kValidation;
  }
  const auto index = q.find(vertex);
  if (!index) {
    std::cerr << "mcluster: unknown vertex '" << vertex << "'\n";
    return kUnknownVertex;
  }
  for (int k = 0; k < count; ++k) q = mutate_procedural(q, *index);
  write_output(out, format == "dot" ? quiver_to_dot(q) : serialize_quiver(q));
  return kOk;
}

ColouredQuiver seed_for(const std::string& spec, int m) {
  if (std::filesystem::exists(spec)) {
    auto q = parse_quiver(read_file(spec));
    if (!validate(q).ok()) throw InvalidQuiverError("seed file is not a valid coloured quiver");
    return q;
  }
  return seed_from_acyclic(dynkin_quiver(spec), m);
}

int run_enumerate(const std::string& spec, int m, std::size_t limit, unsigned threads,
                  const std::string& out) {
  ColouredQuiver seed;
  try {
    seed = seed_for(spec, m);
  } catch (const ParseError& e) {
    std::cerr << "mcluster: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidQuiverError& e) {
    std::cerr << "mcluster: " << e.what() << '\n';
    return kValidation;
  }
  EnumerationOptions options;
  options.limit = limit;
  options.threads = threads;
  auto cls = enumerate_class(seed, options);
  cls.seed = spec;
  if (!out.empty()) {
    std::ostringstream text;
    write_class(text, cls);
    write_output(out, text.str());
  }
  std::cout << "size=" << cls.size() << " complete=" << (cls.complete ? "true" : "false") << '\n';
  return kOk;
}

int run_polygon(const std::string& what, int m, int n, const std::string& angulation_file,
                const std::string& highlight, const std::string& format, const std::string& out) {
  const Polygon p(m, n);
  if (what == "diagonals") {
    std::ostringstream text;
    for (const auto& d : all_m_diagonals(p)) text << to_string(d) << '\n';
    write_output(out, text.str());
  } else if (what == "count") {
    write_output(out, std::to_string(count_angulations(p)) + "\n");
  } else if (what == "facets") {
    const auto r = facet_checks(p);
    std::ostringstream text;
    text << "facets=" << r.facets << " size=";
    if (r.min_facet_size == r.max_facet_size) {
      text << r.min_facet_size;
    } else {
      text << r.min_facet_size << ".." << r.max_facet_size;
    }
    text << " link=";
    if (r.min_link == r.max_link) {
      text << r.min_link;
    } else {
      text << r.min_link << ".." << r.max_link;
    }
    text << '\n';
    write_output(out, text.str());
  } else if (what == "svg" || what == "angulation") {
    const Angulation a =
        angulation_file.empty() ? fan_angulation(p) : parse_angulation(read_file(angulation_file));
    if (what == "angulation" || format == "json") {
      write_output(out, serialize_angulation(a));
      return kOk;
    }
    SvgOptions options;
    if (!highlight.empty()) options.highlight = parse_diagonal(highlight);
    write_output(out.empty() ? "angulation.svg" : out, angulation_to_svg(a, options));
  } else if (what == "gamma") {
    write_output(out, translation_quiver_to_dot(translation_quiver(p)));
  } else if (what == "quiver") {
    const Angulation a =
        angulation_file.empty() ? fan_angulation(p) : parse_angulation(read_file(angulation_file));
    const auto q = coloured_quiver_of_angulation(a);
    write_output(out, format == "dot" ? quiver_to_dot(q) : serialize_quiver(q));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloured quiver mutation and m-angulation explorer"};
  app.require_subcommand(1);

  std::string out;
  std::string format;
  int m = 1;

  auto* mutate = app.add_subcommand("mutate", "Apply coloured mutation to a quiver file");
  std::string input, vertex;
  int count = 1;
  mutate->add_option("input", input, "Quiver JSON file")->required();
  mutate->add_option("--vertex,-v", vertex, "Vertex label")->required();
  mutate->add_option("--count,-c", count, "Number of mutations")->check(CLI::NonNegativeNumber);
  mutate->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  mutate->add_option("--out,-o", out, "Output file (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate a coloured mutation class");
  std::string seed;
  std::size_t limit = 100000;
  unsigned threads = 1;
  enumerate->add_option("seed", seed, "Dynkin spec (A4, D5, E6) or quiver JSON file")->required();
  enumerate->add_option("--m", m)->check(CLI::PositiveNumber);
  enumerate->add_option("--limit", limit, "Expansion budget")->check(CLI::PositiveNumber);
  enumerate->add_option("--threads", threads)->check(CLI::PositiveNumber);
  enumerate->add_option("--out,-o", out, "Class file");

  auto* polygon = app.add_subcommand("polygon", "m-diagonals and angulations of the (mn+2)-gon");
  std::string what, angulation_file, highlight;
  int n = 2;
  polygon->add_option("what", what)
      ->required()
      ->check(CLI::IsMember({"diagonals", "count", "facets", "svg", "gamma", "angulation", "quiver"}));
  polygon->add_option("--m", m)->check(CLI::PositiveNumber);
  polygon->add_option("--n", n)->check(CLI::Range(2, 1000));
  polygon->add_option("--angulation", angulation_file, "Angulation JSON (default: fan)");
  polygon->add_option("--highlight", highlight, "Diagonal whose flips are drawn dashed, e.g. (3,8)");
  polygon->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "svg"}));
  polygon->add_option("--out,-o", out);

  auto* serve = app.add_subcommand("serve", "Run the local session service");
  int port = 8080;
  std::string host = "127.0.0.1";
  serve->add_option("--port", port)->check(CLI::Range(1, 65535));
  serve->add_option("--host", host);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mutate) return run_mutate(input, vertex, count, format, out);
    if (*enumerate) return run_enumerate(seed, m, limit, threads, out);
    if (*polygon) return run_polygon(what, m, n, angulation_file, highlight, format, out);
    if (*serve) {
      SessionService service;
      std::cerr << "mcluster: serving on http://" << host << ':' << port << '\n';
      return service.listen(host, port) ? kOk : kUsage;
    }
  } catch (const ParseError& e) {
    std::cerr << "mcluster: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidQuiverError& e) {
    std::cerr << "mcluster: " << e.what() << '\n';
    return kValidation;
  } catch (const UnknownVertexError& e) {
    std::cerr << "mcluster: " << e.what() << '\n';
    return kUnknownVertex;
  } catch (const std::exception& e) {
    std::cerr << "mcluster: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
