// Copyright 2026 mcsynth contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcsynth/analysis.hpp"
#include "mcsynth/errors.hpp"
#include "mcsynth/lowering.hpp"
#include "mcsynth/parallel.hpp"
#include "mcsynth/qasm.hpp"
#include "mcsynth/simulate.hpp"
#include "mcsynth/synthesis.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mcsynth;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BaseGate parse_u_spec(const std::string& spec) {
  if (spec == "x") return BaseGate::x();
  if (spec == "h") return BaseGate::h();
  if (spec.rfind("phase:", 0) == 0) {
    const std::string frac = spec.substr(6);
    const std::size_t slash = frac.find('/');
    try {
      BigInt p(frac.substr(0, slash));
      BigInt q = slash == std::string::npos ? BigInt(1)
                                            : BigInt(frac.substr(slash + 1));
      return BaseGate::phase(Angle::rational(std::move(p), std::move(q)));
    } catch (const std::exception&) {
      throw UsageError("malformed phase spec '" + spec + "'");
    }
  }
  if (spec.rfind("matrix:", 0) == 0) {
    std::vector<double> vals;
    std::stringstream ss(spec.substr(7));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        vals.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw UsageError("malformed matrix entry '" + item + "'");
      }
    }
    if (vals.size() != 8) {
      throw UsageError("matrix spec needs 8 comma-separated reals");
    }
    const Mat2 m{{vals[0], vals[1]},
                 {vals[2], vals[3]},
                 {vals[4], vals[5]},
                 {vals[6], vals[7]}};
    if (!m.is_unitary(1e-10)) {
      throw UsageError("matrix is not unitary");
    }
    return BaseGate::unitary(m);
  }
  throw UsageError("unknown unitary spec '" + spec +
                   "' (want phase:p/q, x, h or matrix:...)");
}

SplitPolicy parse_split(const std::string& spec) {
  SplitPolicy policy;
  const std::size_t slash = spec.find('/');
  if (slash == std::string::npos) throw UsageError("split must be p/q");
  try {
    policy.low_num = std::stoul(spec.substr(0, slash));
    policy.low_den = std::stoul(spec.substr(slash + 1));
  } catch (const std::exception&) {
    throw UsageError("malformed split '" + spec + "'");
  }
  if (policy.low_num == 0 || policy.low_num >= policy.low_den) {
    throw UsageError("split fraction must lie strictly between 0 and 1");
  }
  return policy;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json report_json(const Circuit& c) {
  const ResourceReport r = c.report();
  const PrecisionAudit audit = precision_audit(c);
  json counts = json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  json out;
  out["schema"] = 1;
  out["level"] = c.level() == Level::Mcx ? "mcx" : "basis";
  out["qubits"] = c.num_qubits();
  out["depth"] = r.depth;
  out["size"] = r.size;
  out["counts"] = counts;
  out["ancilla_clean"] = r.ancilla_clean;
  out["ancilla_dirty"] = r.ancilla_dirty;
  if (audit.max_denominator <= BigInt(std::numeric_limits<std::int64_t>::max())) {
    out["max_denominator"] = audit.max_denominator.convert_to<std::int64_t>();
  } else {
    out["max_denominator"] = audit.max_denominator.str();
  }
  out["unbounded_precision"] = audit.has_unbounded;
  out["det_phase"] = det_phase_string(c);
  return out;
}

// ---- verify ------------------------------------------------------------

struct TargetSpec {
  enum Kind { Mcx, Mcu, Incr } kind = Mcx;
  std::size_t n = 0;
  BaseGate u;
};

TargetSpec parse_target(const std::string& spec) {
  TargetSpec t;
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw UsageError("empty target spec");
  try {
    if (parts[0] == "mcx" && parts.size() == 2) {
      t.kind = TargetSpec::Mcx;
      t.n = std::stoul(parts[1]);
    } else if (parts[0] == "mcu" && parts.size() >= 3) {
      t.kind = TargetSpec::Mcu;
      t.n = std::stoul(parts[1]);
      std::string u = parts[2];
      for (std::size_t i = 3; i < parts.size(); ++i) u += ":" + parts[i];
      t.u = parse_u_spec(u);
    } else if (parts[0] == "incr" && parts.size() == 2) {
      t.kind = TargetSpec::Incr;
      t.n = std::stoul(parts[1]);
    } else {
      throw UsageError("target must be mcx:n, mcu:n:U or incr:n");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("malformed target spec '" + spec + "'");
  }
  if (t.n == 0) throw UsageError("target size must be positive");
  return t;
}

// Wire layout inferred from the file's role annotations.
struct Layout {
  std::vector<std::size_t> inputs;  // ascending
  std::size_t target = SIZE_MAX;    // for mcx/mcu
  std::vector<std::size_t> clean;
  std::vector<std::size_t> dirty;
};

Layout infer_layout(const Circuit& c, const TargetSpec& t) {
  Layout lay;
  for (std::size_t i = 0; i < c.num_qubits(); ++i) {
    switch (c.qubits()[i].role) {
      case QubitRole::Input:
        lay.inputs.push_back(i);
        break;
      case QubitRole::Target:
        if (lay.target != SIZE_MAX) throw UsageError("two target wires");
        lay.target = i;
        break;
      case QubitRole::AncillaClean:
        lay.clean.push_back(i);
        break;
      case QubitRole::AncillaDirty:
        lay.dirty.push_back(i);
        break;
    }
  }
  if (lay.inputs.size() != t.n) {
    throw UsageError("file has " + std::to_string(lay.inputs.size()) +
                     " input wires, target spec wants " + std::to_string(t.n));
  }
  if (t.kind != TargetSpec::Incr && lay.target == SIZE_MAX) {
    throw UsageError("file declares no target wire");
  }
  return lay;
}

// Expected image of a basis state under the target semantics; the state is
// given and returned little-endian over the circuit's wires.
std::uint64_t expected_image(std::uint64_t in, const TargetSpec& t,
                             const Layout& lay) {
  if (t.kind == TargetSpec::Incr) {
    std::uint64_t x = 0;
    for (std::size_t b = 0; b < t.n; ++b) {
      if ((in >> lay.inputs[b]) & 1) x |= std::uint64_t(1) << b;
    }
    x = (x + 1) & ((t.n >= 64 ? ~std::uint64_t(0)
                              : (std::uint64_t(1) << t.n) - 1));
    std::uint64_t out = in;
    for (std::size_t b = 0; b < t.n; ++b) {
      const std::uint64_t bit = std::uint64_t(1) << lay.inputs[b];
      if ((x >> b) & 1)
        out |= bit;
      else
        out &= ~bit;
    }
    return out;
  }
  bool all = true;
  for (std::size_t b = 0; b < t.n; ++b) {
    all = all && ((in >> lay.inputs[b]) & 1);
  }
  if (t.kind == TargetSpec::Mcx) {
    return all ? in ^ (std::uint64_t(1) << lay.target) : in;
  }
  return in;  // Mcu handled densely
}

struct VerifyResult {
  bool ok = true;
  std::string mismatch_input;
  std::string detail;
};

VerifyResult verify_classical(const Circuit& c, const TargetSpec& t,
                              const Layout& lay, std::size_t num_random,
                              std::uint64_t seed) {
  const std::size_t m = c.num_qubits();
  std::mt19937_64 rng(seed);
  std::vector<Bits> cases;
  if (t.kind == TargetSpec::Incr && t.n <= 12 && m <= 20) {
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << t.n); ++x) {
      Bits b(m);
      for (std::size_t i = 0; i < t.n; ++i) {
        b.set(lay.inputs[i], (x >> i) & 1);
      }
      cases.push_back(b);
    }
  } else {
    Bits ones(m);
    for (std::size_t i : lay.inputs) ones.set(i, true);
    cases.push_back(ones);
    if (t.kind != TargetSpec::Incr) {
      for (std::size_t z = 0; z < lay.inputs.size(); ++z) {
        Bits b = ones;
        b.set(lay.inputs[z], false);
        cases.push_back(b);
      }
    }
    for (std::size_t i = 0; i < num_random; ++i) {
      Bits b(m);
      for (std::size_t w : lay.inputs) b.set(w, rng() & 1);
      if (lay.target != SIZE_MAX) b.set(lay.target, rng() & 1);
      for (std::size_t w : lay.dirty) b.set(w, rng() & 1);
      cases.push_back(b);
    }
  }
  VerifyResult res;
  for (const Bits& in : cases) {
    const Bits out = classical_run(c, in);
    bool good = true;
    if (m <= 64) {
      good = out.value() == expected_image(in.value(), t, lay);
    } else {
      // Wide registers: check wire by wire.
      Bits x(t.n);
      for (std::size_t b = 0; b < t.n; ++b) x.set(b, in.get(lay.inputs[b]));
      const Bits want =
          t.kind == TargetSpec::Incr ? oracle_incr(t.n, x) : x;
      bool all = true;
      for (std::size_t b = 0; b < t.n; ++b) all = all && x.get(b);
      for (std::size_t i = 0; i < m && good; ++i) {
        bool expect_bit;
        const auto it =
            std::find(lay.inputs.begin(), lay.inputs.end(), i);
        if (it != lay.inputs.end()) {
          const std::size_t b = std::size_t(it - lay.inputs.begin());
          expect_bit =
              t.kind == TargetSpec::Incr ? want.get(b) : in.get(i);
        } else if (i == lay.target && t.kind == TargetSpec::Mcx) {
          expect_bit = in.get(i) ^ all;
        } else {
          expect_bit = in.get(i);
        }
        good = out.get(i) == expect_bit;
      }
    }
    if (!good) {
      res.ok = false;
      res.mismatch_input = in.str();
      res.detail = "classical mismatch";
      return res;
    }
  }
  return res;
}

VerifyResult verify_dense(const Circuit& c, const TargetSpec& t,
                          const Layout& lay, bool global_phase, double tol) {
  const std::size_t m = c.num_qubits();
  if (m > 20) {
    throw UsageError("dense verification limited to 20 qubits");
  }
  const std::size_t dim = std::size_t(1) << m;
  std::uint64_t clean_mask = 0;
  for (std::size_t i : lay.clean) clean_mask |= std::uint64_t(1) << i;

  const Mat2 u = t.u.to_matrix();
  std::atomic<bool> ok{true};
  std::mutex mu;
  VerifyResult res;
  Complex lambda(1, 0);
  bool lambda_set = !global_phase;

  // The first contractual column pins the global phase when allowed.
  std::vector<std::uint64_t> cols;
  cols.reserve(dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    if ((col & clean_mask) != 0) continue;  // clean ancillas start at 0
    cols.push_back(col);
  }
  if (global_phase && !cols.empty()) {
    const StateVector sv = apply(c, StateVector::basis(m, cols[0]));
    const std::uint64_t img = expected_image(cols[0], t, lay);
    // For mcu the first column may be a superposition; use the largest amp.
    std::size_t best = img;
    if (t.kind == TargetSpec::Mcu) {
      double mag = -1;
      for (std::size_t i = 0; i < dim; ++i) {
        if (std::abs(sv.amps[i]) > mag) {
          mag = std::abs(sv.amps[i]);
          best = i;
        }
      }
    }
    // expected amplitude at `best`
    Complex expect(1, 0);
    if (t.kind == TargetSpec::Mcu) {
      bool all = true;
      for (std::size_t b = 0; b < t.n; ++b) {
        all = all && ((cols[0] >> lay.inputs[b]) & 1);
      }
      if (all) {
        const bool tbit_in = (cols[0] >> lay.target) & 1;
        const bool tbit_out = (best >> lay.target) & 1;
        expect = tbit_in ? (tbit_out ? u.m11 : u.m01)
                         : (tbit_out ? u.m10 : u.m00);
      }
    }
    if (std::abs(sv.amps[best]) < tol) {
      return {false, Bits::from_value(m, cols[0]).str(),
              "no amplitude to pin the global phase"};
    }
    lambda = sv.amps[best] / expect;
    lambda /= std::abs(lambda);
    lambda_set = true;
  }

  parallel_for(cols.size(), [&](std::size_t ci) {
    if (!ok.load(std::memory_order_relaxed)) return;
    const std::uint64_t col = cols[ci];
    const StateVector sv = apply(c, StateVector::basis(m, col));
    bool good = true;
    if (t.kind == TargetSpec::Mcu) {
      bool all = true;
      for (std::size_t b = 0; b < t.n; ++b) {
        all = all && ((col >> lay.inputs[b]) & 1);
      }
      for (std::uint64_t row = 0; row < dim && good; ++row) {
        Complex expect(0, 0);
        if (!all) {
          expect = row == col ? Complex(1, 0) : Complex(0, 0);
        } else {
          const std::uint64_t flip = col ^ (std::uint64_t(1) << lay.target);
          const bool tbit = (col >> lay.target) & 1;
          if (row == (tbit ? flip : col)) expect = tbit ? u.m01 : u.m00;
          if (row == (tbit ? col : flip)) expect = tbit ? u.m11 : u.m10;
        }
        good = std::abs(sv.amps[row] - lambda * expect) <= tol;
      }
    } else {
      const std::uint64_t img = expected_image(col, t, lay);
      for (std::uint64_t row = 0; row < dim && good; ++row) {
        const Complex expect = row == img ? Complex(1, 0) : Complex(0, 0);
        good = std::abs(sv.amps[row] - lambda * expect) <= tol;
      }
    }
    if (!good) {
      bool expected_false = false;
      if (ok.compare_exchange_strong(expected_false, false)) {
      }
      ok.store(false);
      std::lock_guard<std::mutex> lock(mu);
      if (res.ok) {
        res.ok = false;
        res.mismatch_input = Bits::from_value(m, col).str();
        res.detail = "dense mismatch";
      }
    }
  });
  (void)lambda_set;
  return res;
}

// ---- subcommand runners ---------------------------------------------------

int run_synth(const std::string& family, std::size_t n,
              const std::string& ancilla, const std::string& u_spec,
              const std::string& split, std::size_t base_threshold,
              bool lower, const std::string& out_path) {
  SplitPolicy policy = parse_split(split);
  policy.base_threshold = base_threshold;
  policy.validate();
  Circuit c;
  if (family == "mcx") {
    if (ancilla == "clean") {
      c = mcx_clean(n, policy.base_threshold);
    } else if (ancilla == "dirty") {
      c = mcx_dirty(n, policy.base_threshold);
    } else if (ancilla == "none") {
      c = mcx_no_ancilla(n, policy);
    } else {
      throw UsageError("ancilla must be clean, dirty or none");
    }
  } else if (family == "mcu") {
    if (u_spec.empty()) throw UsageError("mcu needs --u");
    const BaseGate base = parse_u_spec(u_spec);
    if (ancilla == "clean") {
      c = mcu_clean(n, base, policy.base_threshold);
    } else if (ancilla == "dirty") {
      c = mcu_dirty(n, base, policy.base_threshold);
    } else {
      throw UsageError("mcu supports clean or dirty ancillas");
    }
  } else if (family == "incr") {
    c = incrementor(n, policy);
  } else {
    throw UsageError("family must be mcx, mcu or incr");
  }
  if (lower) c = lower_to_basis(c);
  const std::string text = to_qasm(c);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << text;
  }
  std::cerr << report_json(c).dump(2) << "\n";
  return kExitOk;
}

int run_verify(const std::string& path, const std::string& target_spec,
               const std::string& mode, double tol, bool global_phase,
               std::size_t num_random, std::uint64_t seed) {
  const Circuit c = from_qasm(read_file(path));
  const TargetSpec t = parse_target(target_spec);
  const Layout lay = infer_layout(c, t);

  std::string chosen = mode;
  if (chosen == "auto") {
    chosen = (c.is_x_type() && t.kind != TargetSpec::Mcu &&
              c.num_qubits() > 16)
                 ? "classical"
                 : "dense";
  }
  VerifyResult res;
  if (chosen == "classical") {
    if (!c.is_x_type()) {
      throw UsageError(
          "circuit contains non-classical gates; classical mode needs an "
          "X-type circuit");
    }
    if (t.kind == TargetSpec::Mcu) {
      throw UsageError("mcu targets need dense verification");
    }
    res = verify_classical(c, t, lay, num_random, seed);
  } else if (chosen == "dense") {
    res = verify_dense(c, t, lay, global_phase, tol);
  } else {
    throw UsageError("mode must be auto, dense or classical");
  }
  json out;
  out["schema"] = 1;
  out["ok"] = res.ok;
  out["target"] = target_spec;
  out["mode"] = chosen;
  if (!res.ok) {
    out["first_mismatch"] = {{"input", res.mismatch_input},
                             {"detail", res.detail}};
  }
  std::cout << out.dump(2) << "\n";
  return res.ok ? kExitOk : kExitVerifyFailed;
}

int run_report(const std::string& path) {
  const Circuit c = from_qasm(read_file(path));
  std::cout << report_json(c).dump(2) << "\n";
  return kExitOk;
}

int run_scaling(const std::string& family, std::size_t n_min,
                std::size_t n_max, const std::string& split,
                std::size_t base_threshold) {
  if (n_min > n_max || n_min == 0) {
    throw UsageError("need 0 < n-min <= n-max");
  }
  const auto fam = family_from_name(family);
  if (!fam) {
    throw UsageError("family must be one of mcx_clean, mcx_dirty, "
                     "incrementor, mcx_no_ancilla");
  }
  SplitPolicy policy = parse_split(split);
  policy.base_threshold = base_threshold;
  std::vector<std::size_t> ns;
  for (std::size_t n = n_min; n <= n_max; n *= 2) {
    ns.push_back(n);
    if (n > n_max / 2) break;
  }
  const auto rows = scaling_report(*fam, ns, policy);
  json jrows = json::array();
  std::vector<std::size_t> depth_mcx, depth_basis;
  for (const auto& r : rows) {
    json jr;
    jr["n"] = r.n;
    jr["depth_mcx"] = r.depth_mcx;
    jr["depth_basis"] = r.depth_basis;
    jr["size"] = r.size;
    jr["size_basis"] = r.size_basis;
    jr["ancilla_clean"] = r.ancilla_clean;
    jr["ancilla_dirty"] = r.ancilla_dirty;
    if (r.depth_diff) jr["depth_diff"] = *r.depth_diff;
    jrows.push_back(jr);
    depth_mcx.push_back(r.depth_mcx);
    depth_basis.push_back(r.depth_basis);
  }
  json out;
  out["schema"] = 1;
  out["family"] = family_name(*fam);
  out["rows"] = jrows;
  if ((*fam == Family::Incrementor || *fam == Family::McxNoAncilla) &&
      ns.size() >= 2) {
    const auto& depths =
        *fam == Family::McxNoAncilla ? depth_basis : depth_mcx;
    const QuadLogFit fit = fit_quadratic_log(ns, depths);
    out["fit"] = {{"a", fit.a},
                  {"b", fit.b},
                  {"max_rel_residual", fit.max_rel_residual}};
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-controlled gate and incrementor circuit synthesis"};
  app.set_version_flag("--version", "mcsynth 0.1.0");
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "synthesize a circuit family");
  std::string family, ancilla = "clean", u_spec, out_path;
  std::string split = "9/10";
  std::size_t n = 0, base_threshold = 5;
  bool lower = false;
  synth->add_option("family", family, "mcx | mcu | incr")->required();
  synth->add_option("--n", n, "number of controls / register width")
      ->required();
  synth->add_option("--ancilla", ancilla, "clean | dirty | none");
  synth->add_option(
      "--u", u_spec,
      "phase:p/q | x | h | matrix:re00,im00,re01,im01,re10,im10,re11,im11");
  synth->add_option("--split", split, "incrementor low fraction (default 9/10)");
  synth->add_option("--base-threshold", base_threshold,
                    "AND recursion base case size (4 or 5)");
  synth->add_flag("--lower", lower, "lower to CNOT + single-qubit gates");
  synth->add_option("-o,--output", out_path, "output .qasm path");

  // verify
  auto* verify = app.add_subcommand("verify", "check a circuit file");
  std::string vpath, target, mode = "auto";
  double tol = 1e-9;
  bool global_phase = false;
  std::size_t num_random = 200;
  std::uint64_t seed = 1;
  verify->add_option("path", vpath, "circuit file")->required();
  verify->add_option("--target", target, "mcx:n | mcu:n:U | incr:n")
      ->required();
  verify->add_option("--mode", mode, "auto | dense | classical");
  verify->add_option("--tol", tol, "tolerance (default 1e-9)");
  verify->add_flag("--global-phase", global_phase,
                   "accept equality up to a global phase");
  verify->add_option("--inputs", num_random, "random inputs (classical mode)");
  verify->add_option("--seed", seed, "random seed");

  // report
  auto* report = app.add_subcommand("report", "resource and precision report");
  std::string rpath;
  report->add_option("path", rpath, "circuit file")->required();

  // scaling
  auto* scaling = app.add_subcommand("scaling", "depth/size scaling table");
  std::string sfamily, ssplit = "9/10";
  std::size_t n_min = 0, n_max = 0, sthreshold = 5;
  scaling->add_option("family", sfamily,
                      "mcx_clean | mcx_dirty | incrementor | mcx_no_ancilla")
      ->required();
  scaling->add_option("--n-min", n_min, "smallest size")->required();
  scaling->add_option("--n-max", n_max, "largest size (doubling steps)")
      ->required();
  scaling->add_option("--split", ssplit, "incrementor low fraction");
  scaling->add_option("--base-threshold", sthreshold,
                      "AND recursion base case size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (synth->parsed()) {
      if (tol <= 0) throw UsageError("tolerance must be positive");
      return run_synth(family, n, ancilla, u_spec, split, base_threshold,
                       lower, out_path);
    }
    if (verify->parsed()) {
      if (tol <= 0) throw UsageError("tolerance must be positive");
      return run_verify(vpath, target, mode, tol, global_phase, num_random,
                        seed);
    }
    if (report->parsed()) {
      return run_report(rpath);
    }
    if (scaling->parsed()) {
      return run_scaling(sfamily, n_min, n_max, ssplit, sthreshold);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
