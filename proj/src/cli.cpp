#include "recon/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "recon/deck.hpp"
#include "recon/enumeration.hpp"
#include "recon/errors.hpp"
#include "recon/graph6.hpp"
#include "recon/membership.hpp"
#include "recon/reconstruct.hpp"
#include "recon/report.hpp"

namespace recon::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string graph;
  std::string deck_file;
  std::size_t v1 = 0;
  std::string others;
  std::size_t max_n = kMaxEnumerationOrder;
  std::size_t jobs = 1;
  std::size_t cap = kDefaultPreimageCap;
  std::string out_file;
  std::string family;
  std::string sizes;
};

// One graph6 input: the positional argument, or every non-blank,
// non-comment line of standard input when the argument is "-".
struct Input {
  std::string text;
  std::string origin;
};

std::vector<Input> collect_inputs(const std::string& arg, std::istream& in) {
  if (arg != "-") return {{arg, "argument"}};
  std::vector<Input> inputs;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    inputs.push_back({line, "line " + std::to_string(line_no)});
  }
  return inputs;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ResourceError*>(&e) != nullptr) return kResourceCap;
  return kInputError;
}

// Runs `body` once per input, isolating failures so that later lines still
// run. The overall code is the most severe one seen.
int for_each_input(const std::vector<Input>& inputs, std::ostream& err,
                   const std::function<int(const Graph&, const std::string&)>& body) {
  int code = kSuccess;
  for (const Input& input : inputs) {
    try {
      code = std::max(code, body(parse_graph6(input.text), input.text));
    } catch (const Error& e) {
      err << input.origin << ": " << e.what() << '\n';
      code = std::max(code, exit_code_for(e));
    }
  }
  return code;
}

VertexSet parse_vertex_csv(const std::string& csv) {
  VertexSet out;
  std::stringstream stream(csv);
  std::string item;
  std::size_t offset = 0;
  while (std::getline(stream, item, ',')) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || value >= kMaxVertices) {
      throw ParseError("bad vertex '" + item + "' in --others", offset);
    }
    out = out.with(value);
    offset += item.size() + 1;
  }
  return out;
}

int cmd_deck(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const bool annotate = opt.graph == "-";
  return for_each_input(collect_inputs(opt.graph, in), err, [&](const Graph& g, const std::string& text) {
    const Deck d = make_deck(g);
    if (annotate) out << "# " << text << '\n';
    out << format_deck(d);
    return kSuccess;
  });
}

int cmd_check(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const ClassWitness w{opt.v1, parse_vertex_csv(opt.others)};
  return for_each_input(collect_inputs(opt.graph, in), err, [&](const Graph& g, const std::string&) {
    const ConditionReport report = check_conditions(g, w);
    out << condition_report_json(report).dump() << '\n';
    return report.all() ? kSuccess : kNegative;
  });
}

int cmd_witness(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  return for_each_input(collect_inputs(opt.graph, in), err, [&](const Graph& g, const std::string&) {
    const auto w = find_witness(g);
    out << (w ? witness_json(*w) : json(nullptr)).dump() << '\n';
    return w ? kSuccess : kNegative;
  });
}

int cmd_reconstruct(const Options& opt, std::istream& in, std::ostream& out) {
  Deck d = [&] {
    if (opt.deck_file == "-") return read_deck(in);
    std::ifstream file(opt.deck_file);
    if (!file) throw ParseError("cannot open deck file " + opt.deck_file, 0);
    return read_deck(file);
  }();
  const auto result = reconstruct_auto(d);
  out << (result ? reconstruction_json(*result) : json(nullptr)).dump() << '\n';
  return result ? kSuccess : kNegative;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  return for_each_input(collect_inputs(opt.graph, in), err, [&](const Graph& g, const std::string& text) {
    const std::vector<Graph> preimages = brute_force_preimages(make_deck(g), opt.cap);
    const bool unique = preimages.size() == 1 && is_isomorphic(preimages.front(), g).has_value();
    out << json{{"graph6", text}, {"unique", unique}, {"preimages", preimages.size()}}.dump() << '\n';
    return unique ? kSuccess : kNegative;
  });
}

int cmd_survey(const Options& opt, std::ostream& out) {
  std::ofstream sidecar;
  if (!opt.out_file.empty()) {
    sidecar.open(opt.out_file);
    if (!sidecar) throw ParseError("cannot open output file " + opt.out_file, 0);
  }
  const SurveyReport report = survey(opt.max_n, opt.jobs, [&](const SurveyRow& row) {
    out << survey_row_json(row).dump() << '\n' << std::flush;
    if (sidecar.is_open()) {
      for (const Graph& g : row.member_graphs) sidecar << emit_graph6(g) << '\n';
      sidecar.flush();
    }
  });
  for (const BatteryRow& row : report.battery) out << battery_row_json(row).dump() << '\n';
  return report.counterexamples() == 0 ? kSuccess : kNegative;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  if (opt.family != "stars") throw ParseError("unknown family '" + opt.family + "' (expected 'stars')", 0);
  const MultiStar member = generate_multi_star(parse_star_sizes(opt.sizes));
  out << json{{"graph6", emit_graph6(member.graph)}, {"witness", witness_json(member.witness)}}.dump() << '\n';
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deck tools for a class of reconstructible graphs"};
  app.require_subcommand(1);
  Options opt;

  auto* deck = app.add_subcommand("deck", "Print the deck of a graph as graph6 cards");
  deck->add_option("graph", opt.graph, "graph6 text, or - for standard input")->required();

  auto* check = app.add_subcommand("check", "Evaluate the membership conditions for a witness");
  check->add_option("graph", opt.graph, "graph6 text, or - for standard input")->required();
  check->add_option("--v1", opt.v1, "Distinguished vertex")->required();
  check->add_option("--others", opt.others, "Comma-separated vertices of S")->required();

  auto* witness = app.add_subcommand("witness", "Search for a membership witness");
  witness->add_option("graph", opt.graph, "graph6 text, or - for standard input")->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "Rebuild a class member from its deck");
  reconstruct->add_option("--deck", opt.deck_file, "Deck file (graph6 card per line), or -")->required();

  auto* verify = app.add_subcommand("verify", "Check that a graph's deck has a unique preimage");
  verify->add_option("graph", opt.graph, "graph6 text, or - for standard input")->required();
  verify->add_option("--cap", opt.cap, "Maximum number of preimage classes");

  auto* survey_cmd = app.add_subcommand("survey", "Exhaustive survey of all graphs up to --max-n vertices");
  survey_cmd->add_option("--max-n", opt.max_n, "Largest order to enumerate (<= 7)");
  survey_cmd->add_option("--jobs", opt.jobs, "Worker threads for enumeration");
  survey_cmd->add_option("--out", opt.out_file, "Sidecar file receiving member graphs as graph6");

  auto* gen = app.add_subcommand("gen", "Generate a class member");
  gen->add_option("family", opt.family, "Family name (stars)")->required();
  gen->add_option("sizes", opt.sizes, "Star sizes as A;B,C")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (deck->parsed()) return cmd_deck(opt, in, out, err);
    if (check->parsed()) return cmd_check(opt, in, out, err);
    if (witness->parsed()) return cmd_witness(opt, in, out, err);
    if (reconstruct->parsed()) return cmd_reconstruct(opt, in, out);
    if (verify->parsed()) return cmd_verify(opt, in, out, err);
    if (survey_cmd->parsed()) return cmd_survey(opt, out);
    if (gen->parsed()) return cmd_gen(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kInputError;
}

}  // namespace recon::cli
