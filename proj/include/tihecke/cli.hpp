#pragma once

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tihecke/coxeter.hpp"
#include "tihecke/errors.hpp"
#include "tihecke/format.hpp"
#include "tihecke/hecke.hpp"
#include "tihecke/invmod.hpp"
#include "tihecke/serialize.hpp"
#include "tihecke/twist.hpp"
#include "tihecke/verify.hpp"

namespace tihecke::cli {

// exit codes: 0 pass, 1 check failure, 2 usage error, 3 internal invariant
// violation
inline int exit_code_of(errc code) {
  switch (code) {
    case errc::internal:
    case errc::not_polynomial:
    case errc::pi_not_unique:
    case errc::denominator_outside_A_minus1:
    case errc::determinant_not_unit:
    case errc::not_invertible:
      return 3;
    default:
      return 2;
  }
}

struct RunConfig {
  std::string group;                 // preset name or spec file path
  std::vector<int> star;             // 1-based override
  std::optional<int> cutoff;
  long max_elements = 2'000'000;
  std::string backend = "auto";
  std::string format = "text";
  std::string cache_dir;             // empty disables the cache
  std::uint64_t seed = 0;
  bool timing = false;

  std::string check = "all";         // verify
  std::string lambda_text;           // specialize/verify
  long modulus = 0;                  // prime field modulus; 0 = rationals
  std::string z_word;                // mu
  std::string left_word, right_word; // heckemul
};

// --- group spec resolution ----------------------------------------------

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Minimal TOML subset: `key = value` lines with string, integer-list and
// nested-list values; '#' comments.
inline CoxeterSpec spec_from_toml(const std::string& text) {
  std::string preset;
  std::vector<int> star;
  std::vector<std::vector<int>> matrix;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(errc::bad_io, "bad TOML line '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "preset") {
      if (value.size() < 2 || value.front() != '"' || value.back() != '"')
        fail(errc::bad_io, "preset must be a quoted string");
      preset = value.substr(1, value.size() - 2);
    } else if (key == "star" || key == "matrix") {
      json parsed;
      try {
        parsed = json::parse(value);  // list syntax is shared with JSON
      } catch (...) {
        fail(errc::bad_io, "bad list value for '" + key + "'");
      }
      try {
        if (key == "star")
          star = parsed.get<std::vector<int>>();
        else
          matrix = parsed.get<std::vector<std::vector<int>>>();
      } catch (...) {
        fail(errc::bad_io, "bad list value for '" + key + "'");
      }
    } else {
      fail(errc::bad_io, "unknown TOML key '" + key + "'");
    }
  }
  if (!preset.empty() && !matrix.empty()) fail(errc::invalid_spec, "preset and matrix are mutually exclusive");
  CoxeterSpec spec;
  if (!preset.empty())
    spec = CoxeterSpec::preset(preset);
  else if (!matrix.empty())
    spec = CoxeterSpec::from_matrix(std::move(matrix));
  else
    fail(errc::invalid_spec, "group spec needs a preset or a matrix");
  if (!star.empty()) spec = spec.with_star_one_based(star);
  return spec;
}

}  // namespace detail

inline CoxeterSpec resolve_spec(const RunConfig& cfg) {
  if (cfg.group.empty()) fail(errc::invalid_spec, "missing --group");
  CoxeterSpec spec;
  if (std::filesystem::exists(cfg.group)) {
    std::ifstream in(cfg.group);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    if (cfg.group.size() >= 5 && cfg.group.substr(cfg.group.size() - 5) == ".toml") {
      spec = detail::spec_from_toml(text);
    } else {
      json j;
      try {
        j = json::parse(text);
      } catch (const std::exception& e) {
        fail(errc::bad_io, "cannot parse '" + cfg.group + "': " + e.what());
      }
      spec = spec_from_json(j);
    }
  } else {
    spec = CoxeterSpec::preset(cfg.group);
  }
  if (!cfg.star.empty()) spec = spec.with_star_one_based(cfg.star);
  return spec;
}

inline EnumerateOptions enumerate_options(const RunConfig& cfg) {
  EnumerateOptions opts;
  opts.max_elements = cfg.max_elements;
  if (cfg.cutoff) opts.length_cutoff = *cfg.cutoff;
  using B = EnumerateOptions::Backend;
  if (cfg.backend == "auto")
    opts.backend = B::automatic;
  else if (cfg.backend == "geometric")
    opts.backend = B::geometric;
  else if (cfg.backend == "dihedral")
    opts.backend = B::dihedral;
  else if (cfg.backend == "perm_a")
    opts.backend = B::perm_a;
  else if (cfg.backend == "signed_perm_b")
    opts.backend = B::signed_perm_b;
  else
    fail(errc::invalid_spec, "unknown backend '" + cfg.backend + "'");
  return opts;
}

inline FieldScalar parse_lambda(const RunConfig& cfg) {
  if (cfg.lambda_text.empty()) fail(errc::invalid_spec, "missing --lambda");
  try {
    if (cfg.modulus != 0) return FieldScalar::residue(Int(cfg.lambda_text), Int(cfg.modulus));
    if (auto slash = cfg.lambda_text.find('/'); slash != std::string::npos)
      return FieldScalar::rational(Int(cfg.lambda_text.substr(0, slash)),
                                   Int(cfg.lambda_text.substr(slash + 1)));
    return FieldScalar::rational(Int(cfg.lambda_text));
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(errc::invalid_spec, "cannot parse lambda '" + cfg.lambda_text + "'");
  }
}

// --- L-table cache --------------------------------------------------------

inline std::filesystem::path cache_path(const std::string& dir, const CoxeterSpec& spec) {
  return std::filesystem::path(dir) / ("ltable-" + cache_key(spec) + ".json");
}

// A cached table is trusted only after its triangular leading coefficients
// re-verify; anything else is discarded with a warning.
inline std::optional<LTable> load_cached_ltable(const std::string& dir, const GroupTable& W, const TwistTable& T,
                                                std::ostream& warn) {
  if (dir.empty()) return std::nullopt;
  const auto path = cache_path(dir, W.spec());
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    std::ifstream in(path);
    json j = json::parse(in);
    LTable L = ltable_from_json(W, T, j);
    for (std::int32_t z = 0; z < T.size(); ++z)
      if (L.L(T.sigma(z), z) != u_plus_1().pow(static_cast<unsigned>(T.ell_star(z))))
        fail(errc::bad_io, "leading coefficient mismatch at z=" + W.word_name(T.group_index(z)));
    return L;
  } catch (const std::exception& e) {
    warn << "warning: discarding corrupt cache entry " << path.string() << " (" << e.what() << ")\n";
    return std::nullopt;
  }
}

inline void store_ltable(const std::string& dir, const GroupTable& W, const TwistTable& T, const LTable& L,
                         std::ostream& warn) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = cache_path(dir, W.spec());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) {
      warn << "warning: cache directory not writable: " << dir << "\n";
      return;
    }
    out << ltable_to_json(W, T, L).dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) warn << "warning: cache store failed: " << ec.message() << "\n";
}

inline LTable load_or_compute_ltable(const RunConfig& cfg, const GroupTable& W, const TwistTable& T,
                                     std::ostream& warn) {
  if (auto cached = load_cached_ltable(cfg.cache_dir, W, T, warn)) return std::move(*cached);
  LTable L = compute_L_table(W, T);
  store_ltable(cfg.cache_dir, W, T, L, warn);
  return L;
}

// --- rendering helpers -----------------------------------------------------

inline std::string hecke_to_text(const GroupTable& W, const HeckeElt<Laurent>& h) {
  if (h.empty()) return "0";
  std::string s;
  for (const auto& [x, c] : h.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*T_{" + W.word_name(x) + "}";
  }
  return s;
}

inline std::string module_to_text(const GroupTable& W, const TwistTable& T, const ModuleElt<Laurent>& m) {
  if (m.empty()) return "0";
  std::string s;
  for (const auto& [z, c] : m.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*a_{" + W.word_name(T.group_index(z)) + "}";
  }
  return s;
}

inline void emit_table(const TableDoc& doc, const json& as_json, const RunConfig& cfg, std::ostream& out) {
  const OutputFormat fmt = parse_format(cfg.format);
  if (fmt == OutputFormat::json)
    out << as_json.dump(2) << "\n";
  else
    out << render_table(doc, fmt);
}

// --- subcommands -----------------------------------------------------------

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CoxeterSpec spec = resolve_spec(cfg);
  GroupTable W = enumerate_group(spec, enumerate_options(cfg));
  (void)err;
  TableDoc doc;
  doc.title = "group " + spec.display_name() + " size " + std::to_string(W.size()) +
              (W.truncated() ? " (truncated)" : "");
  doc.header = {"index", "word", "length", "inverse", "star", "ldesc", "rdesc"};
  json rows = json::array();
  for (std::int32_t w = 0; w < W.size(); ++w) {
    auto bits_to_string = [&](std::uint32_t bits) {
      std::string s;
      for (int g = 0; g < W.rank(); ++g)
        if (bits & (1u << g)) s += (s.empty() ? "" : ",") + std::to_string(g + 1);
      return s.empty() ? "-" : s;
    };
    doc.add_row({std::to_string(w), W.word_name(w), std::to_string(W.length(w)), W.word_name(W.inverse(w)),
                 W.word_name(W.star(w)), bits_to_string(W.left_descent_bits(w)),
                 bits_to_string(W.right_descent_bits(w))});
    rows.push_back(json{{"index", w},
                        {"word", W.word_name(w)},
                        {"length", W.length(w)},
                        {"inverse", W.word_name(W.inverse(w))},
                        {"star", W.word_name(W.star(w))}});
  }
  json j{{"command", "enumerate"}, {"group", spec_to_json(spec)}, {"size", W.size()},
         {"truncated", W.truncated()}, {"elements", std::move(rows)}};
  emit_table(doc, j, cfg, out);
  return 0;
}

inline int cmd_twisted(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CoxeterSpec spec = resolve_spec(cfg);
  GroupTable W = enumerate_group(spec, enumerate_options(cfg));
  TwistTable T = enumerate_twisted(W);
  (void)err;
  TableDoc doc;
  doc.title = "twisted involutions of " + spec.display_name() + ": " + std::to_string(T.size());
  doc.header = {"index", "word", "length", "rho", "ell_star", "expr", "sigma", "completion"};
  json rows = json::array();
  for (std::int32_t z = 0; z < T.size(); ++z) {
    const auto& e = T.entry(z);
    doc.add_row({std::to_string(z), W.word_name(e.group_index), std::to_string(W.length(e.group_index)),
                 std::to_string(e.rho), std::to_string(e.ell_star), GroupTable::word_to_name(e.expr),
                 W.word_name(e.sigma), GroupTable::word_to_name(e.completion)});
    rows.push_back(json{{"index", z},
                        {"word", W.word_name(e.group_index)},
                        {"length", W.length(e.group_index)},
                        {"rho", e.rho},
                        {"ell_star", e.ell_star},
                        {"expr", GroupTable::word_to_name(e.expr)},
                        {"sigma", W.word_name(e.sigma)},
                        {"completion", GroupTable::word_to_name(e.completion)}});
  }
  json j{{"command", "twisted"}, {"group", spec_to_json(spec)}, {"count", T.size()}, {"rows", std::move(rows)}};
  emit_table(doc, j, cfg, out);
  return 0;
}

inline int cmd_lpoly(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CoxeterSpec spec = resolve_spec(cfg);
  GroupTable W = enumerate_group(spec, enumerate_options(cfg));
  TwistTable T = enumerate_twisted(W);
  LTable L = load_or_compute_ltable(cfg, W, T, err);
  TableDoc doc;
  doc.title = "L polynomials of " + spec.display_name();
  doc.header = {"x", "z", "L", "Ltilde", "n"};
  doc.math_cols = {false, false, true, true, false};
  for (std::int32_t x = 0; x < W.size(); ++x)
    for (const auto& [z, poly] : L.row(x).terms())
      doc.add_row({W.word_name(x), W.word_name(T.group_index(z)), poly.to_string(),
                   L.Ltilde(x, z).to_string(), std::to_string(L.n(x, z))});
  emit_table(doc, ltable_to_json(W, T, L), cfg, out);
  return 0;
}

inline int cmd_mu(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CoxeterSpec spec = resolve_spec(cfg);
  GroupTable W = enumerate_group(spec, enumerate_options(cfg));
  TwistTable T = enumerate_twisted(W);
  LTable L = load_or_compute_ltable(cfg, W, T, err);
  const std::int32_t g = W.element_of_word(W.parse_word(cfg.z_word.empty() ? "e" : cfg.z_word));
  const std::int32_t z = T.index_of_group(g);
  if (z == npos) fail(errc::not_twisted_involution, W.word_name(g) + " is not a twisted involution");
  HeckeElt<Laurent> image = mu_of_az(L, z);
  if (parse_format(cfg.format) == OutputFormat::json) {
    json j{{"command", "mu"}, {"group", spec_to_json(spec)}, {"z", W.word_name(g)},
           {"mu", hecke_to_json(W, image)}};
    out << j.dump(2) << "\n";
  } else {
    out << "mu(a_{" << W.word_name(g) << "}) = " << hecke_to_text(W, image) << "\n";
  }
  return 0;
}

inline int cmd_pi(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CoxeterSpec spec = resolve_spec(cfg);
  GroupTable W = enumerate_group(spec, enumerate_options(cfg));
  TwistTable T = enumerate_twisted(W);
  LTable L = load_or_compute_ltable(cfg, W, T, err);
  TableDoc doc;
  doc.title = "pi: W -> I* for " + spec.display_name();
  doc.header = {"x", "pi(x)"};
  json rows = json::array();
  for (std::int32_t x = 0; x < W.size(); ++x) {
    const std::string px = W.word_name(T.group_index(L.pi(x)));
    doc.add_row({W.word_name(x), px});
    rows.push_back(json{{"x", W.word_name(x)}, {"pi", px}});
  }
  json j{{"command", "pi"}, {"group", spec_to_json(spec)}, {"pairs", std::move(rows)}};
  emit_table(doc, j, cfg, out);
  return 0;
}

inline int cmd_heckemul(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CoxeterSpec spec = resolve_spec(cfg);
  GroupTable W = enumerate_group(spec, enumerate_options(cfg));
  (void)err;
  const std::int32_t right = W.element_of_word(W.parse_word(cfg.right_word.empty() ? "e" : cfg.right_word));
  HeckeElt<Laurent> prod = mult_word_left<Laurent>(W, W.parse_word(cfg.left_word.empty() ? "e" : cfg.left_word),
                                                   HeckeElt<Laurent>::unit(right));
  if (parse_format(cfg.format) == OutputFormat::json) {
    json j{{"command", "heckemul"}, {"group", spec_to_json(spec)}, {"left", cfg.left_word},
           {"right", cfg.right_word}, {"product", hecke_to_json(W, prod)}};
    out << j.dump(2) << "\n";
  } else {
    out << hecke_to_text(W, prod) << "\n";
  }
  return 0;
}

inline int cmd_specialize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CoxeterSpec spec = resolve_spec(cfg);
  VerifyContext ctx = VerifyContext::build(spec, enumerate_options(cfg));
  ctx.L = load_or_compute_ltable(cfg, ctx.W, ctx.T, err);
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.lambda = parse_lambda(cfg);
  CheckReport rep = run_check(ctx, "specialization", opts);
  if (parse_format(cfg.format) == OutputFormat::json) {
    json j{{"command", "specialize"}, {"group", spec_to_json(spec)}, {"lambda", cfg.lambda_text},
           {"modulus", cfg.modulus}, {"report", report_to_json(rep, cfg.timing)}};
    out << j.dump(2) << "\n";
  } else {
    out << (rep.pass ? "PASS" : "FAIL") << " specialization at lambda=" << opts.lambda->to_string() << ": "
        << (rep.pass ? rep.detail : rep.witness) << "\n";
  }
  return rep.pass ? 0 : 1;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CoxeterSpec spec = resolve_spec(cfg);
  VerifyContext ctx = VerifyContext::build(spec, enumerate_options(cfg));
  ctx.L = load_or_compute_ltable(cfg, ctx.W, ctx.T, err);
  VerifyOptions opts;
  opts.seed = cfg.seed;
  if (!cfg.lambda_text.empty()) opts.lambda = parse_lambda(cfg);

  std::vector<CheckReport> reports;
  if (cfg.check == "all") {
    reports = run_all_checks(ctx, opts);
  } else {
    std::stringstream names(cfg.check);
    std::string name;
    while (std::getline(names, name, ',')) reports.push_back(run_check(ctx, name, opts));
  }

  bool all_pass = true;
  for (const auto& rep : reports) all_pass = all_pass && rep.pass;

  if (parse_format(cfg.format) == OutputFormat::json) {
    json checks = json::array();
    for (const auto& rep : reports) checks.push_back(report_to_json(rep, cfg.timing));
    json j{{"command", "verify"}, {"group", spec_to_json(spec)}, {"seed", cfg.seed},
           {"pass", all_pass}, {"checks", std::move(checks)}};
    out << j.dump(2) << "\n";
  } else {
    out << "# verify " << spec.display_name() << " seed " << cfg.seed << "\n";
    for (const auto& rep : reports) {
      out << (rep.pass ? "PASS" : "FAIL") << "  " << rep.check;
      if (cfg.timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " [%.1f ms]", rep.wall_ms);
        out << buf;
      }
      if (rep.pass && !rep.detail.empty()) out << "  (" << rep.detail << ")";
      if (!rep.pass) out << "  witness: " << rep.witness;
      out << "\n";
    }
    out << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_pass ? 0 : 1;
}

// --- entry point -----------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification of u-deformed involution modules over Iwahori-Hecke algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("TIHECKE_CACHE_DIR")) cfg.cache_dir = env;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "preset name (A3, B2, I2(5), ...) or spec file (.json/.toml)")
        ->required();
    sub->add_option("--star", cfg.star, "diagram involution as a 1-based permutation, e.g. 2,1")->delimiter(',');
    sub->add_option("--cutoff", cfg.cutoff, "length cutoff for infinite groups");
    sub->add_option("--max-elements", cfg.max_elements, "enumeration bound");
    sub->add_option("--backend", cfg.backend, "auto|geometric|dihedral|perm_a|signed_perm_b");
    sub->add_option("--format", cfg.format, "json|csv|latex|text");
    sub->add_option("--cache-dir", cfg.cache_dir, "L-table cache directory (env TIHECKE_CACHE_DIR)");
    sub->add_option("--seed", cfg.seed, "seed for sampled checks");
    sub->add_flag("--timing", cfg.timing, "include wall times in reports");
    return sub;
  };

  auto* c_enum = add_common(app.add_subcommand("enumerate", "enumerate the group"));
  auto* c_twisted = add_common(app.add_subcommand("twisted", "tabulate the twisted involutions"));
  auto* c_lpoly = add_common(app.add_subcommand("lpoly", "structure polynomials L and Ltilde"));
  auto* c_mu = add_common(app.add_subcommand("mu", "image of a basis vector under mu"));
  c_mu->add_option("--z", cfg.z_word, "twisted involution as a word, e.g. 1.2.1")->required();
  auto* c_pi = add_common(app.add_subcommand("pi", "the fibration pi: W -> I*"));
  auto* c_heckemul = add_common(app.add_subcommand("heckemul", "product of standard basis elements"));
  c_heckemul->add_option("--left", cfg.left_word, "left factor word")->required();
  c_heckemul->add_option("--right", cfg.right_word, "right factor word");
  auto* c_spec = add_common(app.add_subcommand("specialize", "rank of the specialized basis matrix"));
  c_spec->add_option("--lambda", cfg.lambda_text, "specialization point (rational p/q, or residue with --mod)")
      ->required();
  c_spec->add_option("--mod", cfg.modulus, "prime modulus > 3 for a finite field");
  auto* c_verify = add_common(app.add_subcommand("verify", "run named checks"));
  c_verify->add_option("--check", cfg.check, "check name list or 'all'");
  c_verify->add_option("--lambda", cfg.lambda_text, "single specialization point for the specialization check");
  c_verify->add_option("--mod", cfg.modulus, "prime modulus > 3 for a finite field");

  std::vector<const char*> argv;
  argv.push_back("tihecke");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_enum->parsed()) return cmd_enumerate(cfg, out, err);
    if (c_twisted->parsed()) return cmd_twisted(cfg, out, err);
    if (c_lpoly->parsed()) return cmd_lpoly(cfg, out, err);
    if (c_mu->parsed()) return cmd_mu(cfg, out, err);
    if (c_pi->parsed()) return cmd_pi(cfg, out, err);
    if (c_heckemul->parsed()) return cmd_heckemul(cfg, out, err);
    if (c_spec->parsed()) return cmd_specialize(cfg, out, err);
    if (c_verify->parsed()) return cmd_verify(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_of(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace tihecke::cli
