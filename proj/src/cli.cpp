#include "halidon/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "halidon/audit.hpp"
#include "halidon/error.hpp"
#include "halidon/group_ring.hpp"
#include "halidon/halidon.hpp"
#include "halidon/maschke.hpp"
#include "halidon/ring_core.hpp"
#include "halidon/transform.hpp"

namespace halidon::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_vector(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("expected comma-separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty coefficient vector");
  return out;
}

json matrix_json(const ModMatrix& m) { return m.to_rows(); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

GroupTable table_from_json(const json& j) {
  try {
    auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
    const auto identity = j.at("identity").get<std::size_t>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) {
      throw Error(Errc::invalid_table, "declared order does not match the table");
    }
    return GroupTable(std::move(table), identity);
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_table, std::string("malformed group table: ") + e.what());
  }
}

ModMatrix matrix_from_json(const json& j, u64 n) {
  try {
    return ModMatrix(j.get<std::vector<std::vector<std::int64_t>>>(), n);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed matrix: ") + e.what());
  }
}

// Ring selection shared by the group-ring, transform and maschke commands.
struct RingFlags {
  u64 n = 0;
  std::optional<u64> m;
  std::optional<u64> w;

  void attach(CLI::App* sub) {
    sub->add_option("--n", n, "modulus")->required();
    sub->add_option("--m", m, "index (default: vector length, else the maximal index)");
    sub->add_option("--w", w, "primitive m-th root (default: smallest)");
  }

  HalidonStructure resolve(std::optional<std::size_t> length = std::nullopt) const {
    if (n < 2) throw UsageError("--n must be >= 2");
    u64 index;
    if (m) {
      index = *m;
    } else if (length) {
      index = *length;
    } else {
      index = detect(n, DetectOptions{0}).m_max;
    }
    if (w) return HalidonStructure::certify(n, index, *w % n);
    return HalidonStructure::canonical(n, index);
  }
};

struct Options {
  bool envelope = false;
  bool pretty = false;
  u64 number = 0;
  std::vector<std::string> vectors;
  std::string mode;
  std::string range;
  std::string suite = "all";
  u64 max_index = 24;
  std::string table_path;
  std::string phi_path;
  RingFlags ring;
};

std::pair<u64, u64> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) return {3, std::stoull(text)};
    return {std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1))};
  } catch (const std::logic_error&) {
    throw UsageError("--range expects LO:HI or HI, got '" + text + "'");
  }
}

json report_json(const AuditReport& r) {
  return {{"suite", r.suite}, {"range", {r.lo, r.hi}}, {"checked", r.checked},
          {"ok", r.ok()},     {"failures", r.failures}};
}

json residues(const std::vector<Residue>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(r.value());
  return out;
}

using Handler = std::function<json(const Options&)>;

struct Command {
  std::string name;
  std::string description;
  enum Kind { number, ring_vectors, ring_only, custom } kind;
  std::size_t vector_count = 0;
  Handler handler;
};

std::vector<Command> commands() {
  std::vector<Command> cmds;

  cmds.push_back({"detect", "maximal halidon index of Z_n and its primitive roots", Command::number, 0,
                  [](const Options& o) {
                    const auto d = detect(o.number);
                    return json{{"n", d.n}, {"m", d.m_max}, {"roots", d.roots}};
                  }});
  cmds.push_back({"psi", "halidon function psi(n)", Command::number, 0,
                  [](const Options& o) {
                    return json{{"n", o.number}, {"psi", halidon_psi(o.number)}};
                  }});
  cmds.push_back({"profile", "factorization, phi, Carmichael lambda and psi", Command::number, 0,
                  [](const Options& o) {
                    const auto p = profile(o.number);
                    json factors = json::array();
                    for (const auto& f : p.factors) factors.push_back({f.prime, f.exponent});
                    return json{{"n", p.n},
                                {"factors", factors},
                                {"phi", p.phi},
                                {"carmichael", p.carmichael},
                                {"psi", p.psi}};
                  }});
  cmds.push_back({"units", "units of Z_n with their inverses", Command::number, 0,
                  [](const Options& o) {
                    json pairs = json::array();
                    for (const auto& [x, y] : units(o.number)) pairs.push_back({x.value(), y.value()});
                    return json{{"n", o.number}, {"units", pairs}};
                  }});
  cmds.push_back({"idempotents", "idempotents of Z_n", Command::number, 0,
                  [](const Options& o) {
                    return json{{"n", o.number}, {"idempotents", residues(idempotents(o.number))}};
                  }});
  cmds.push_back({"involutions", "involutions of Z_n", Command::number, 0,
                  [](const Options& o) {
                    return json{{"n", o.number}, {"involutions", residues(involutions(o.number))}};
                  }});
  cmds.push_back({"aut-quadratic", "|Aut(Z_n[X]/(X^2-1))| for odd n", Command::number, 0,
                  [](const Options& o) {
                    return json{{"n", o.number}, {"automorphisms", aut_quadratic(o.number)}};
                  }});
  cmds.push_back({"rigidity", "whether m! = 2^k phi(m) for some k >= 1", Command::number, 0,
                  [](const Options& o) {
                    return json{{"m", o.number}, {"rigid", rigidity_check(o.number)}};
                  }});

  cmds.push_back({"grp-lambda", "lambda spectrum of a group-ring element", Command::ring_vectors, 1,
                  [](const Options& o) {
                    const auto a = parse_vector(o.vectors[0]);
                    const auto ring = o.ring.resolve(a.size());
                    return json{{"lambda", lambda_transform(GroupRingElement(ring, a)).values()}};
                  }});
  cmds.push_back({"grp-reconstruct", "group-ring element with the given spectrum",
                  Command::ring_vectors, 1, [](const Options& o) {
                    const auto l = parse_vector(o.vectors[0]);
                    const auto ring = o.ring.resolve(l.size());
                    return json{{"alpha", lambda_reconstruct(Spectrum(ring, l)).coeffs()}};
                  }});
  cmds.push_back({"grp-inverse", "multiplicative inverse in Z_n C_m", Command::ring_vectors, 1,
                  [](const Options& o) {
                    const auto a = parse_vector(o.vectors[0]);
                    const auto ring = o.ring.resolve(a.size());
                    const GroupRingElement u(ring, a);
                    const auto v = inverse_element(u);
                    return json{{"inverse", v.coeffs()}, {"involution", v == u}};
                  }});
  cmds.push_back({"grp-idempotent", "idempotent of Z_n C_m with an idempotent spectrum",
                  Command::ring_vectors, 1, [](const Options& o) {
                    const auto l = parse_vector(o.vectors[0]);
                    const auto ring = o.ring.resolve(l.size());
                    return json{{"idempotent", idempotent_from_spectrum(Spectrum(ring, l)).coeffs()}};
                  }});
  cmds.push_back({"grp-census", "count units and idempotents of Z_n C_m", Command::ring_only, 0,
                  [](const Options& o) {
                    const auto ring = o.ring.resolve();
                    std::string mode = o.mode.empty() ? "formula" : o.mode;
                    if (mode != "formula" && mode != "brute") {
                      throw UsageError("--mode must be 'brute' or 'formula'");
                    }
                    const auto c = census(ring, mode == "brute" ? CensusMode::brute_force
                                                                : CensusMode::formula);
                    return json{{"n", ring.n()},        {"m", ring.m()},
                                {"w", ring.omega()},    {"mode", mode},
                                {"units", c.units},     {"idempotents", c.idempotents}};
                  }});

  cmds.push_back({"dft", "discrete Fourier transform", Command::ring_vectors, 1,
                  [](const Options& o) {
                    const auto f = parse_vector(o.vectors[0]);
                    const auto ring = o.ring.resolve(f.size());
                    return json{{"F", dft(CoeffVector(ring, f)).entries()}};
                  }});
  cmds.push_back({"idft", "inverse discrete Fourier transform", Command::ring_vectors, 1,
                  [](const Options& o) {
                    const auto F = parse_vector(o.vectors[0]);
                    const auto ring = o.ring.resolve(F.size());
                    return json{{"f", idft(DftVector(ring, F)).entries()}};
                  }});
  cmds.push_back({"convolve", "cyclic convolution of two vectors", Command::ring_vectors, 2,
                  [](const Options& o) {
                    const auto f = parse_vector(o.vectors[0]);
                    const auto g = parse_vector(o.vectors[1]);
                    const auto ring = o.ring.resolve(f.size());
                    std::string mode = o.mode.empty() ? "direct" : o.mode;
                    if (mode != "direct" && mode != "spectral") {
                      throw UsageError("--mode must be 'direct' or 'spectral'");
                    }
                    const auto h = convolve(CoeffVector(ring, f), CoeffVector(ring, g),
                                            mode == "direct" ? ConvolutionMode::direct
                                                             : ConvolutionMode::spectral);
                    return json{{"h", h.entries()}};
                  }});
  cmds.push_back({"circulant", "circulant matrix C_u", Command::ring_vectors, 1,
                  [](const Options& o) {
                    const auto u = parse_vector(o.vectors[0]);
                    const auto ring = o.ring.resolve(u.size());
                    return json{{"matrix", matrix_json(circulant(CoeffVector(ring, u)).entries)}};
                  }});
  cmds.push_back({"bilinear", "bilinear form <x, y>_u = x C_u y^T", Command::ring_vectors, 3,
                  [](const Options& o) {
                    const auto u = parse_vector(o.vectors[0]);
                    const auto ring = o.ring.resolve(u.size());
                    const CoeffVector cu(ring, u), x(ring, parse_vector(o.vectors[1])),
                        y(ring, parse_vector(o.vectors[2]));
                    return json{{"value", bilinear_eval(cu, x, y)}};
                  }});
  cmds.push_back({"gram", "Gram matrix of <.,.>_u on the s-basis", Command::ring_vectors, 1,
                  [](const Options& o) {
                    const auto u = parse_vector(o.vectors[0]);
                    const auto ring = o.ring.resolve(u.size());
                    return json{{"gram", matrix_json(gram_s_basis(CoeffVector(ring, u)))}};
                  }});
  cmds.push_back({"nondegenerate", "whether <.,.>_u is certified nondegenerate",
                  Command::ring_vectors, 1, [](const Options& o) {
                    const auto u = parse_vector(o.vectors[0]);
                    const auto ring = o.ring.resolve(u.size());
                    return json{{"nondegenerate", is_nondegenerate(CoeffVector(ring, u))}};
                  }});

  cmds.push_back({"maschke-cyclic", "eigen-projections of the regular representation of C_m",
                  Command::ring_only, 0, [](const Options& o) {
                    const auto ring = o.ring.resolve();
                    json idems = json::array(), projs = json::array();
                    for (std::size_t r = 1; r <= ring.m(); ++r) {
                      idems.push_back(
                          idempotent_from_spectrum(Spectrum::basis(ring, r)).coeffs());
                    }
                    for (const auto& p : cyclic_decomposition(ring)) {
                      projs.push_back(matrix_json(p.matrix()));
                    }
                    return json{{"n", ring.n()},
                                {"m", ring.m()},
                                {"w", ring.omega()},
                                {"idempotents", idems},
                                {"projections", projs}};
                  }});
  cmds.push_back({"maschke-average", "average a projection over a group given as a table file",
                  Command::custom, 0, [](const Options& o) {
                    if (o.ring.n < 2) throw UsageError("--n must be >= 2");
                    const auto group = table_from_json(read_json_file(o.table_path));
                    const auto rep = permutation_rep(group, o.ring.n);
                    const std::size_t k = rep.degree();
                    ModMatrix phi(k, k, o.ring.n);
                    if (o.phi_path.empty()) {
                      // Kill e_1..e_{k-1} and send e_k to the all-ones vector.
                      for (std::size_t i = 0; i < k; ++i) phi(i, k - 1) = 1;
                    } else {
                      phi = matrix_from_json(read_json_file(o.phi_path), o.ring.n);
                    }
                    const auto tau = average_projection(rep, Projection(phi));
                    const auto split = split_module(rep, tau.matrix());
                    return json{{"n", o.ring.n},
                                {"tau", matrix_json(tau.matrix())},
                                {"U", split.invariant.vectors},
                                {"W", split.complement.vectors},
                                {"U_free", split.invariant.free},
                                {"W_free", split.complement.free}};
                  }});
  cmds.push_back({"audit", "run invariant suites over a range of n", Command::custom, 0,
                  [](const Options& o) {
                    const auto [lo, hi] = parse_range(o.range.empty() ? "3:500" : o.range);
                    const std::string suite = o.suite;
                    if (suite != "all" && suite != "conjecture" && suite != "structure" &&
                        suite != "agreement") {
                      throw UsageError("--suite must be all, conjecture, structure or agreement");
                    }
                    json reports = json::array();
                    if (suite == "all" || suite == "conjecture") {
                      reports.push_back(report_json(conjecture_audit(lo, hi)));
                    }
                    if (suite == "all" || suite == "structure") {
                      reports.push_back(report_json(structure_audit(lo, hi)));
                    }
                    if (suite == "all" || suite == "agreement") {
                      reports.push_back(report_json(agreement_audit(lo, hi, o.max_index)));
                    }
                    return json{{"reports", reports}};
                  }});
  return cmds;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  Options opts;
  CLI::App app{"Halidon-ring toolkit: Z_n structure, group rings, transforms, Maschke splittings",
               "halidon"};
  app.require_subcommand(1);
  app.add_flag("--json", opts.envelope, "wrap output in {status, payload, diagnostics}");
  app.add_flag("--pretty", opts.pretty, "indent JSON output");

  auto cmds = commands();
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& cmd : cmds) {
    auto* sub = app.add_subcommand(cmd.name, cmd.description);
    sub->fallthrough();
    switch (cmd.kind) {
      case Command::number:
        sub->add_option("value", opts.number, "integer argument")->required();
        break;
      case Command::ring_vectors:
        opts.ring.attach(sub);
        sub->add_option("vectors", opts.vectors, "comma-separated integer vectors")
            ->required()
            ->expected(static_cast<int>(cmd.vector_count));
        sub->add_option("--mode", opts.mode, "direct|spectral (convolve)");
        break;
      case Command::ring_only:
        opts.ring.attach(sub);
        sub->add_option("--mode", opts.mode, "brute|formula (grp-census)");
        break;
      case Command::custom:
        break;
    }
    subs.emplace_back(sub, &cmd);
  }
  for (auto& [sub, cmd] : subs) {
    if (cmd->name == "maschke-average") {
      sub->add_option("table", opts.table_path, "GroupTable JSON file")->required();
      sub->add_option("--n", opts.ring.n, "modulus")->required();
      sub->add_option("--phi", opts.phi_path, "starting projection as a JSON matrix");
    } else if (cmd->name == "audit") {
      sub->add_option("--range", opts.range, "LO:HI (default 3:500)");
      sub->add_option("--suite", opts.suite, "all|conjecture|structure|agreement");
      sub->add_option("--max-index", opts.max_index, "largest m for the agreement suite");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.diagnostics.push_back(app.help());
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::error;
    result.exit_code = 2;
    std::string message = e.what();
    for (auto& [sub, cmd] : subs) {
      if (sub->parsed()) message += "\n" + sub->help();
    }
    if (message == e.what()) message += "\n" + app.help();
    result.diagnostics.push_back(message);
    result.payload = {{"status", "error"}, {"error", "usage"}, {"message", e.what()}};
    return result;
  }
  result.envelope = opts.envelope;
  result.pretty = opts.pretty;

  for (auto& [sub, cmd] : subs) {
    if (!sub->parsed()) continue;
    try {
      result.payload = cmd->handler(opts);
    } catch (const UsageError& e) {
      result.status = Status::error;
      result.exit_code = 2;
      result.diagnostics.push_back(e.what());
      result.payload = {{"status", "error"}, {"error", "usage"}, {"message", e.what()}};
    } catch (const Error& e) {
      result.status = Status::error;
      result.exit_code = 1;
      result.diagnostics.push_back(e.what());
      result.payload = {{"status", "error"}, {"error", to_string(e.code())}, {"message", e.what()}};
    }
    break;
  }
  return result;
}

std::string render(const CommandResult& result) {
  nlohmann::ordered_json out;
  if (result.envelope) {
    auto payload = result.payload;
    payload.erase("status");
    out = {{"status", result.status == Status::ok ? "ok" : "error"},
           {"payload", payload},
           {"diagnostics", result.diagnostics}};
  } else {
    out = result.payload;
  }
  return out.dump(result.pretty ? 2 : -1);
}

}  // namespace halidon::cli
