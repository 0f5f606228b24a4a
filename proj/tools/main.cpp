#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainfib/record.hpp"
#include "chainfib/verify.hpp"

namespace {

using namespace chainfib;

struct GlobalOpts {
  std::string format = "table";
  std::string out_path;
};

int emit(const OutputRecord& rec, const GlobalOpts& opts) {
  const auto format = format_from_name(opts.format);
  if (!format) {
    std::cerr << "unknown format '" << opts.format << "'\n";
    return 2;
  }
  const std::string payload = render(rec, *format);
  std::cout << payload;
  if (!opts.out_path.empty()) {
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << opts.out_path << "\n";
      return 1;
    }
    out << payload;
  }
  return 0;
}

int emit_error(const std::string& command, const ojson& inputs, const error& e,
               const GlobalOpts& opts) {
  OutputRecord rec;
  rec.command = command;
  rec.inputs = inputs;
  rec.result["error"] = ojson{{"kind", errc_name(e.code())}, {"message", e.what()}};
  emit(rec, opts);
  return 1;
}

ojson tuple_json(const std::vector<i64>& coords) {
  return ojson(coords);
}

OutputRecord magic_record(i64 x, i64 y, i64 z) {
  OutputRecord rec;
  rec.command = "magic class";
  rec.inputs = ojson{{"x", x}, {"y", y}, {"z", z}};
  rec.provenance = {"magic-fibered-cone", "norm-x+y-z", "boundary-gcd-sum"};
  const MagicClass v(x, y, z);
  rec.result["in_cone"] = magic_in_cone(v);
  rec.result["primitive"] = is_primitive(v.underlying());
  rec.result["norm"] = magic_norm(v);
  rec.result["boundaries"] = magic_boundaries(v);
  rec.result["surface"] = surface_json(magic_classify(v));
  return rec;
}

OutputRecord chain_record(const std::vector<i64>& coords) {
  OutputRecord rec;
  rec.command = "chain class";
  rec.inputs = ojson{{"coords", tuple_json(coords)}};
  rec.provenance = {"chain-fibered-subcone", "norm-coordinate-sum",
                    "cyclic-boundary-gcd-sum"};
  const ChainClass v(coords);
  rec.result["length"] = static_cast<i64>(v.length());
  rec.result["cone_status"] = cone_status_name(chain_cone_status(v));
  rec.result["primitive"] = is_primitive(v.underlying());
  rec.result["norm"] = chain_norm(v);
  rec.result["boundaries"] = chain_boundaries(v);
  rec.result["surface"] = surface_json(chain_classify(v));
  return rec;
}

OutputRecord seq_record(i64 m, i64 pad, i64 i, i64 t) {
  OutputRecord rec;
  rec.command = "seq";
  rec.inputs = ojson{{"m", m}, {"pad", pad}, {"i", i}, {"t", t}};
  rec.provenance = {"sequence-families", "cyclic-boundary-gcd-sum"};
  const SequenceIndex idx{m, pad, i, t};
  const ChainClass s = chain_sequence_t(idx);
  rec.result["tuple"] = tuple_json(s.coords());
  rec.result["length"] = idx.length();
  rec.result["norm"] = chain_norm(s);
  rec.result["boundaries"] = chain_boundaries(s);
  rec.result["surface"] = surface_json(chain_classify(s));
  rec.result["claimed_surface"] = surface_json(chain_sequence_claim(idx));
  if (t == 1) {
    const EntropyCap cap = normalized_entropy_cap(idx);
    rec.result["normalized_entropy_bound"] = format_real(cap.exact);
    rec.result["normalized_entropy_cap"] = format_real(cap.cap);
  }
  return rec;
}

OutputRecord target_record(i64 k, i64 g, i64 n) {
  OutputRecord rec;
  rec.command = "target";
  rec.inputs = ojson{{"k", k}, {"g", g}, {"n", n}};
  rec.provenance = {"theorem-domain", "sequence-families"};
  const ChainClass s = solve_target(k, g, n);
  rec.result["tuple"] = tuple_json(s.coords());
  rec.result["length"] = static_cast<i64>(s.length());
  rec.result["primitive"] = is_primitive(s.underlying());
  rec.result["surface"] = surface_json(chain_classify(s));
  return rec;
}

OutputRecord bounds_record(i64 k, i64 g, i64 n) {
  OutputRecord rec;
  rec.command = "bounds";
  rec.inputs = ojson{{"k", k}, {"g", g}, {"n", n}};
  rec.provenance = {"lower-bound-constant-chain", "theorem-domain",
                    "entropy-cap"};
  const BoundsReport r = bounds_report({k, g, n});
  rec.result["chi_abs"] = r.chi_abs;
  rec.result["lower"] = format_real(r.lower);
  rec.result["in_theorem_domain"] = r.in_theorem_domain;
  if (!r.in_theorem_domain)
    rec.result["domain_violation"] = r.domain_violation;
  if (r.upper) rec.result["upper"] = format_real(*r.upper);
  if (r.witness) rec.result["witness"] = tuple_json(r.witness->coords());
  if (r.corollary) rec.result["corollary"] = format_real(*r.corollary);
  if (r.entropy_cap) {
    rec.result["normalized_entropy_bound"] = format_real(r.entropy_cap->exact);
    rec.result["normalized_entropy_cap"] = format_real(r.entropy_cap->cap);
  }
  return rec;
}

OutputRecord stretch_record(i64 n) {
  OutputRecord rec;
  rec.command = "stretch";
  rec.inputs = ojson{{"n", n}};
  rec.provenance = {"thurston-construction", "monodromy-stretch-closed-form"};
  const StretchFactor s = monodromy_stretch(n);
  rec.result["mu"] = n;
  rec.result["stretch"] = stretch_json(s);
  rec.result["entropy"] = format_real(std::log(s.value));
  return rec;
}

OutputRecord family_record(const std::string& id_name, i64 k) {
  OutputRecord rec;
  rec.command = "family";
  rec.inputs = ojson{{"id", id_name}, {"k", k}};
  rec.provenance = {"magic-coordinate-families", "boundary-gcd-sum"};
  const auto id = magic_family_from_name(id_name);
  if (!id) fail(errc::invalid_input, "unknown family id '" + id_name + "'");
  const MagicClass v = magic_family(*id, k);
  rec.result["tuple"] = tuple_json(v.underlying().coords());
  rec.result["norm"] = magic_norm(v);
  rec.result["boundaries"] = magic_boundaries(v);
  rec.result["surface"] = surface_json(magic_classify(v));
  rec.result["claimed_surface"] = surface_json(magic_family_claim(*id, k));
  return rec;
}

OutputRecord domain_record(i64 g, i64 max_k) {
  OutputRecord rec;
  rec.command = "domain";
  rec.inputs = ojson{{"g", g}, {"max_k", max_k}};
  rec.provenance = {"theorem-domain"};
  if (g < 2 || max_k < 1)
    fail(errc::invalid_input, "need g >= 2 and max-k >= 1");
  ojson rows = ojson::array();
  for (i64 k = 0; k <= max_k; ++k)
    for (i64 n = k + 1; n <= 2 * k - 4 * g + 6; ++n) {
      if (!theorem_domain_violation(k, g, n).empty()) continue;
      ojson row = ojson::object();
      row["k"] = k;
      row["n"] = n;
      row["upper"] = format_real(upper_bound({k, g, n}).value);
      rows.push_back(std::move(row));
    }
  rec.result["rows"] = std::move(rows);
  return rec;
}

int run_verify(const GlobalOpts& opts) {
  OutputRecord rec;
  rec.command = "verify";
  rec.provenance = {"whole-library-invariants"};
  ojson rows = ojson::array();
  bool all_passed = true;
  for (const CheckResult& r : run_all_checks()) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail
              << ")\n";
    all_passed = all_passed && r.passed;
    ojson row = ojson::object();
    row["check"] = r.name;
    row["passed"] = r.passed;
    row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  rec.result["rows"] = std::move(rows);
  if (!opts.out_path.empty()) {
    const auto format = format_from_name(opts.format);
    std::ofstream out(opts.out_path, std::ios::binary);
    out << render(rec, format.value_or(Format::json));
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fibered-class arithmetic for the magic manifold and "
               "chained-link complements"};
  app.require_subcommand(1);

  GlobalOpts opts;
  app.add_option("--format", opts.format, "output format: json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", opts.out_path, "also write the payload to a file");

  auto* magic = app.add_subcommand("magic", "magic-manifold fibered classes");
  magic->require_subcommand(1);
  auto* magic_class = magic->add_subcommand("class", "classify a class (x, y, z)");
  std::vector<i64> magic_coords;
  magic_class->add_option("coords", magic_coords, "x y z")->expected(3);

  auto* chain = app.add_subcommand("chain", "chained-link fibered classes");
  chain->require_subcommand(1);
  auto* chain_class = chain->add_subcommand("class", "classify a class (a1..aN)");
  std::vector<i64> chain_coords;
  chain_class->add_option("coords", chain_coords, "a1 .. aN")->expected(4, -1);

  i64 m = 1, pad = 0, idx_i = 0, t = 1;
  auto* seq = app.add_subcommand("seq", "build and classify a sequence tuple");
  seq->add_option("--m", m, "number of blocks")->required();
  seq->add_option("--pad", pad, "leading entries")->required();
  seq->add_option("--i", idx_i, "trailing entries")->required();
  seq->add_option("--t", t, "block height (default 1)");

  i64 k = 0, g = 0, n = 0;
  auto* target = app.add_subcommand("target", "class of length k+1 and type S_{g,n}");
  target->add_option("--k", k)->required();
  target->add_option("--g", g)->required();
  target->add_option("--n", n)->required();

  auto* bounds = app.add_subcommand("bounds", "bounds on L(k, g, n)");
  bounds->add_option("--k", k)->required();
  bounds->add_option("--g", g)->required();
  bounds->add_option("--n", n)->required();

  i64 stretch_n = 0;
  auto* stretch = app.add_subcommand("stretch", "monodromy stretch factor of M(n)");
  stretch->add_option("--n", stretch_n)->required();

  std::string family_id;
  auto* family = app.add_subcommand("family", "magic-manifold coordinate family");
  family->add_option("--id", family_id, "3b1..3b4, 4b1..4b4, pa..pd")->required();
  family->add_option("--k", k)->required();

  i64 max_k = 1;
  auto* domain = app.add_subcommand("domain", "lattice points of the theorem domain");
  domain->add_option("--g", g)->required();
  domain->add_option("--max-k", max_k)->required();

  auto* verify = app.add_subcommand("verify", "run the whole invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command;
  ojson inputs = ojson::object();
  try {
    if (magic_class->parsed()) {
      command = "magic class";
      inputs = ojson{{"x", magic_coords[0]}, {"y", magic_coords[1]},
                     {"z", magic_coords[2]}};
      return emit(magic_record(magic_coords[0], magic_coords[1], magic_coords[2]),
                  opts);
    }
    if (chain_class->parsed()) {
      command = "chain class";
      inputs = ojson{{"coords", tuple_json(chain_coords)}};
      return emit(chain_record(chain_coords), opts);
    }
    if (seq->parsed()) {
      command = "seq";
      inputs = ojson{{"m", m}, {"pad", pad}, {"i", idx_i}, {"t", t}};
      return emit(seq_record(m, pad, idx_i, t), opts);
    }
    if (target->parsed()) {
      command = "target";
      inputs = ojson{{"k", k}, {"g", g}, {"n", n}};
      return emit(target_record(k, g, n), opts);
    }
    if (bounds->parsed()) {
      command = "bounds";
      inputs = ojson{{"k", k}, {"g", g}, {"n", n}};
      return emit(bounds_record(k, g, n), opts);
    }
    if (stretch->parsed()) {
      command = "stretch";
      inputs = ojson{{"n", stretch_n}};
      return emit(stretch_record(stretch_n), opts);
    }
    if (family->parsed()) {
      command = "family";
      inputs = ojson{{"id", family_id}, {"k", k}};
      return emit(family_record(family_id, k), opts);
    }
    if (domain->parsed()) {
      command = "domain";
      inputs = ojson{{"g", g}, {"max_k", max_k}};
      return emit(domain_record(g, max_k), opts);
    }
    if (verify->parsed()) return run_verify(opts);
  } catch (const error& e) {
    return emit_error(command, inputs, e, opts);
  }
  return 2;
}
