#include "indgen/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "indgen/generator.hpp"
#include "indgen/parser.hpp"
#include "indgen/render.hpp"
#include "indgen/semantics.hpp"

namespace indgen {

namespace {

// Atoms per type parameter used by --check.
constexpr std::size_t kCarrierSize = 2;

struct Options {
  std::string format = "text";
  bool pointed = false;
  bool check = false;
  std::size_t depth = 3;
  std::size_t samples = 200;
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  std::vector<std::string> inputs;
};

struct Source {
  std::string name;
  std::string text;
};

std::string comment_marker(const std::string& format) {
  if (format == "latex") return "%";
  if (format == "sexpr") return ";";
  return "--";
}

std::string render(const Formula& f, const std::string& format) {
  if (format == "latex") return render_latex(f);
  if (format == "sexpr") return render_sexpr(f);
  return render_text(f);
}

std::string heading(const DataDecl& d) {
  std::string s = d.type_name;
  for (const auto& p : d.type_params) s += " " + p;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Generate structural induction principles for algebraic data types",
               "indgen"};
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "latex", "sexpr"}));
  app.add_flag("--pointed", opt.pointed, "Add the clause P(⊥) for pointed types");
  app.add_flag("--check", opt.check, "Run the finite-model soundness oracle");
  app.add_option("--depth", opt.depth, "Term depth bound for --check")
      ->check(CLI::PositiveNumber);
  app.add_option("--samples", opt.samples,
                 "Sampled predicates when the universe is too large to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Seed for sampled predicates");
  app.add_option("--output", opt.output, "Write output to FILE instead of stdout");
  app.add_option("inputs", opt.inputs, "Declaration files (default: stdin)");

  std::vector<std::string> argv_store{"indgen"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadFlags;
  }

  std::vector<Source> sources;
  if (opt.inputs.empty()) {
    sources.push_back({"<stdin>", std::string(std::istreambuf_iterator<char>(in), {})});
  } else {
    for (const auto& path : opt.inputs) {
      std::ifstream f(path, std::ios::binary);
      if (!f) {
        err << "error: cannot read '" << path << "'\n";
        return kExitParseError;
      }
      sources.push_back({path, std::string(std::istreambuf_iterator<char>(f), {})});
    }
  }

  // Everything is parsed before anything is generated.
  std::vector<DataDecl> decls;
  for (const auto& src : sources) {
    try {
      auto parsed = parse_program(src.text);
      decls.insert(decls.end(), parsed.begin(), parsed.end());
    } catch (const ParseError& e) {
      err << src.name << ":" << e.what() << "\n";
      return kExitParseError;
    }
  }

  std::ostringstream body;
  const std::string marker = comment_marker(opt.format);
  for (std::size_t i = 0; i < decls.size(); ++i) {
    const DataDecl& d = decls[i];
    for (const auto& n : nested_recursive_arguments(d)) {
      err << "warning: " << d.type_name << ": argument " << n.position << " of "
          << n.constructor << " has type " << render_text(n.type)
          << ", which contains " << d.type_name
          << " below the top level; no induction hypothesis is generated for it\n";
    }
    const Principle p = induction_principle(d, {opt.pointed});
    if (i) body << "\n";
    body << marker << " " << heading(d) << "\n" << render(p.formula, opt.format) << "\n";
  }

  int code = kExitOk;
  if (opt.check) {
    std::vector<std::string> summary;
    for (const auto& d : decls) {
      const GroundEnv env = GroundEnv::uniform(d, kCarrierSize);
      try {
        SoundnessReport r;
        try {
          r = check_soundness(d, {opt.pointed}, env, opt.depth, CheckMode::exhaustive());
        } catch (const OracleError& e) {
          if (e.kind() != OracleError::Kind::kExhaustiveRefused) throw;
          r = check_soundness(d, {opt.pointed}, env, opt.depth,
                              CheckMode::sampled(opt.samples, opt.seed));
        }
        if (!r.passed()) code = kExitCounterexample;
        summary.push_back(r.summary());
      } catch (const OracleError& e) {
        err << "warning: soundness check skipped: " << e.what() << "\n";
      }
    }
    if (!summary.empty()) {
      body << "\n";
      for (const auto& line : summary) body << line << "\n";
    }
  }

  if (opt.output.empty()) {
    out << body.str();
  } else {
    std::ofstream f(opt.output, std::ios::binary);
    if (!f || !(f << body.str())) {
      err << "error: cannot write '" << opt.output << "'\n";
      return kExitParseError;
    }
  }
  return code;
}

}  // namespace indgen
