#include <chrono>
#include <functional>
#include <memory>
#include <random>

#include "isopar/cli.hpp"
#include "isopar/error.hpp"
#include "isopar/forms.hpp"
#include "isopar/pencil.hpp"

namespace isopar {

namespace {

/// Lazily computed data of one example, shared by all suites of a run.
class ExampleContext {
 public:
  explicit ExampleContext(ExampleId id) : id_(id) {}

  ExampleId id() const { return id_; }
  std::string tag() const { return to_string(id_); }

  const CliffordSystem& clifford() {
    if (!sys_) sys_ = std::make_unique<CliffordSystem>(build_clifford_system());
    return *sys_;
  }
  const MPoly& F() {
    if (!F_) F_ = std::make_unique<MPoly>(id_ == ExampleId::H45 ? build_F_45() : build_F_fkm(clifford()));
    return *F_;
  }
  const AdaptedFrame& frame() {
    if (!frame_) frame_ = std::make_unique<AdaptedFrame>(id_ == ExampleId::H45 ? frame_45() : frame_69(clifford()));
    return *frame_;
  }
  const SecondThirdForms& forms() {
    if (!forms_) forms_ = std::make_unique<SecondThirdForms>(ot_expand(F(), frame()));
    return *forms_;
  }
  const ShapeBlocks& blocks() {
    if (!blocks_) blocks_ = std::make_unique<ShapeBlocks>(shape_blocks(forms()));
    return *blocks_;
  }
  const ThirdFormTensor& tensor() {
    if (!T_) T_ = std::make_unique<ThirdFormTensor>(third_form_tensor(forms()));
    return *T_;
  }
  std::size_t m1() const { return id_ == ExampleId::H45 ? 4 : 6; }
  std::size_t m2() const { return id_ == ExampleId::H45 ? 5 : 9; }

 private:
  ExampleId id_;
  std::unique_ptr<CliffordSystem> sys_;
  std::unique_ptr<MPoly> F_;
  std::unique_ptr<AdaptedFrame> frame_;
  std::unique_ptr<SecondThirdForms> forms_;
  std::unique_ptr<ShapeBlocks> blocks_;
  std::unique_ptr<ThirdFormTensor> T_;
};

class Runner {
 public:
  Runner(Report& report, std::uint64_t seed, std::size_t samples)
      : report_(report), seed_(seed), samples_(samples) {}

  /// Runs a group of checks, timing it and turning exceptions into failures.
  void group(const std::string& prefix, const std::string& fallback_id, const std::function<CheckList()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckList list;
    try {
      list = body();
    } catch (const std::exception& e) {
      list = {{fallback_id, false, std::string("error: ") + e.what()}};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const double each = list.empty() ? 0.0 : ms / static_cast<double>(list.size());
    for (auto& c : list)
      report_.checks.push_back({prefix + "." + c.id, c.pass ? Status::Pass : Status::Fail, c.detail, each});
  }

  void run(const std::string& suite, ExampleContext& ex);

 private:
  void cm(ExampleContext& ex);
  void frames(ExampleContext& ex);
  void blocks(ExampleContext& ex);
  void mirror(ExampleContext& ex);
  void thirdform(ExampleContext& ex);
  void pq(ExampleContext& ex);
  void circ(ExampleContext& ex);
  void pencil(ExampleContext& ex);

  Report& report_;
  std::uint64_t seed_;
  std::size_t samples_;
};

CheckResult check(std::string id, bool pass, std::string detail) { return {std::move(id), pass, std::move(detail)}; }

void Runner::cm(ExampleContext& ex) {
  group(ex.tag(), "cm", [&] {
    const auto r = verify_cm(ex.F(), 4, static_cast<unsigned>(ex.m1()), static_cast<unsigned>(ex.m2()));
    const long lap = (static_cast<long>(ex.m2()) - static_cast<long>(ex.m1())) * 8;
    return CheckList{
        check("cm.gradient_norm", r.gradient_ok,
              r.gradient_ok ? "|grad F|^2 = 16|x|^6" : std::to_string(r.gradient_residual_terms) + " residual terms"),
        check("cm.laplacian", r.laplacian_ok,
              r.laplacian_ok ? "Delta F = " + std::to_string(lap) + "|x|^2"
                             : std::to_string(r.laplacian_residual_terms) + " residual terms")};
  });
}

void Runner::frames(ExampleContext& ex) {
  group(ex.tag(), "frames", [&] {
    CheckList out;
    const auto& fr = ex.frame();
    const MPoly& F = ex.F();
    out.push_back(check("frames.orthonormal", fr.is_orthonormal(), "Gram matrix of the frame = I"));
    const Scalar fx = F.eval(std::span<const Scalar>(fr.x));
    out.push_back(check("frames.F_at_x", fx == Scalar(1), "F(x) = " + fx.to_string()));
    out.push_back(check("frames.euler", euler_operator(F) == F * Scalar(4), "sum x_i dF/dx_i = 4F"));
    const auto& f = ex.forms();
    MPoly p0(f.tangent_dim());
    for (std::size_t i = 1; i <= f.m2; ++i) {
      p0 += MPoly::variable(f.tangent_dim(), f.xvar(i)) * MPoly::variable(f.tangent_dim(), f.xvar(i));
      p0 -= MPoly::variable(f.tangent_dim(), f.yvar(i)) * MPoly::variable(f.tangent_dim(), f.yvar(i));
    }
    out.push_back(check("frames.p0_eigenvalues", f.p[0] == p0, "S_0 = +1 on E+, -1 on E-, 0 on E0"));
    const AdaptedFrame d = dual_frame(fr);
    out.push_back(check("frames.dual_orthonormal", d.is_orthonormal(), "dual frame Gram matrix = I"));
    const Scalar fd = F.eval(std::span<const Scalar>(d.x));
    out.push_back(check("frames.dual_point", fd == Scalar(-1), "F(x*) = " + fd.to_string()));
    Vec back(fr.ambient_dim);
    for (std::size_t i = 0; i < back.size(); ++i) back[i] = (d.x[i] + d.normals[0][i]) * Scalar::inv_sqrt2();
    out.push_back(check("frames.dual_involution", back == fr.x, "(x* + n0*)/sqrt2 = x"));
    if (ex.id() == ExampleId::FKM69) {
      const auto& sys = ex.clifford();
      const auto rep = verify_clifford(sys);
      out.push_back(check("frames.clifford_system", rep.pass, rep.detail));
      const auto st = stiefel_check(fkm::zeta_eta());
      out.push_back(check("frames.stiefel", st.pass, st.detail));
      const Scalar fz = F.eval(std::span<const Scalar>(fkm::zeta_eta()));
      out.push_back(check("frames.F_at_zeta_eta", fz == Scalar(-1), "F(zeta, eta) = " + fz.to_string()));
      bool p_ok = true;
      for (std::size_t al = 3; al <= 8; ++al)
        for (std::size_t mu = 3; mu <= 8; ++mu) {
          const Vec ph = sys.mats[9].apply(fkm::h(al));
          p_ok = p_ok && dot(ph, fkm::k(mu)) == Scalar(al == mu ? 1 : 0);
          for (std::size_t i = 0; i <= 8; ++i)
            p_ok = p_ok && dot(sys.mats[i].apply(fkm::h(al)), fkm::k(mu)).is_zero();
        }
      out.push_back(check("frames.P_relations", p_ok, "<P9 h_a, k_m> = +delta (J8 = [[0,I],[-I,0]]), <P_i h_a, k_m> = 0 for i <= 8"));
    }
    return out;
  });
  group(ex.tag(), "duality", [&] { return duality_check(ex.F(), ex.frame()); });
}

void Runner::blocks(ExampleContext& ex) {
  group(ex.tag(), "blocks", [&] {
    const auto& f = ex.forms();
    CheckList out{check("blocks.ot_residual", f.residual_ok, "t^0 remainder of the expansion")};
    const auto& b = ex.blocks();
    out.push_back(check("blocks.pattern", true,
                        std::to_string(b.A.size()) + " shape operators in block form, S_0 = diag(I,-I,0)"));
    for (auto& c : block_identity_suite(b, default_block_options(ex.id()))) out.push_back(std::move(c));
    return out;
  });
}

void Runner::mirror(ExampleContext& ex) {
  group(ex.tag(), "mirror", [&] { return mirror_check(ex.blocks(), ex.tensor()); });
}

void Runner::thirdform(ExampleContext& ex) {
  group(ex.tag(), "thirdform", [&] {
    CheckList out = third_form_checks(ex.tensor());
    for (auto& c : uv_cross_check(ex.forms(), ex.blocks(), ex.tensor())) out.push_back(std::move(c));
    for (auto& c : roundtrip_check(ex.F(), ex.frame(), ex.forms())) out.push_back(std::move(c));
    return out;
  });
}

void Runner::pq(ExampleContext& ex) {
  group(ex.tag(), "pq", [&] { return pq_gradient_suite(ex.forms()); });
}

void Runner::circ(ExampleContext& ex) {
  group(ex.tag(), "circ", [&] { return circ_suite(ex.tensor(), default_block_options(ex.id()).algebra, seed_); });
}

void Runner::pencil(ExampleContext& ex) {
  const std::size_t d = default_block_options(ex.id()).designated;
  group(ex.tag(), "pencil", [&] {
    CheckList out = pencil_calibration(ex.blocks(), d);
    for (auto& c : estimate_structure_check(ex.blocks(), d)) out.push_back(std::move(c));
    for (auto& c : jacobian_rank_check(ex.forms(), 50, seed_)) out.push_back(std::move(c));
    // Real directions: nullity m1.
    std::mt19937_64 rng(seed_);
    bool real_ok = true;
    for (int s = 0; s < 20 && real_ok; ++s) {
      std::vector<cdouble> c(ex.m1() + 1);
      for (auto& v : c) v = cdouble(static_cast<double>(static_cast<long>(rng() % 2001) - 1000) / 1000.0, 0.0);
      if (c[0] == cdouble(0.0)) c[0] = 1.0;
      real_ok = nullity(pencil_matrix(std::span<const cdouble>(c), ex.blocks())) == ex.m1();
    }
    out.push_back(check("pencil.real_direction_nullity", real_ok, "20 real directions, nullity = m1"));
    return out;
  });
  group(ex.tag(), "pencil.scan", [&] {
    auto scan = r_lambda_scan(ex.blocks(), sample_hyperquadric(ex.m1(), samples_, seed_));
    json hist = json::object();
    for (const auto& [r, count] : scan.histogram) hist[std::to_string(r)] = count;
    report_.scans.push_back(json{{"example", ex.tag()},
                                 {"m1", scan.m1},
                                 {"m2", scan.m2},
                                 {"k", scan.k},
                                 {"n_samples", scan.n_samples},
                                 {"seed", seed_},
                                 {"histogram", hist},
                                 {"violations", scan.violations}});
    const bool ok = scan.violations.empty() && scan.histogram.size() == 1 && scan.histogram.count(1) == 1 &&
                    scan.histogram.at(1) == samples_;
    return CheckList{check("pencil.r_lambda_scan", ok, "histogram " + hist.dump() + " over k = " + std::to_string(scan.k))};
  });
}

void Runner::run(const std::string& suite, ExampleContext& ex) {
  if (suite == "cm") cm(ex);
  else if (suite == "frames") frames(ex);
  else if (suite == "blocks") blocks(ex);
  else if (suite == "mirror") mirror(ex);
  else if (suite == "thirdform") thirdform(ex);
  else if (suite == "pq") pq(ex);
  else if (suite == "circ") circ(ex);
  else if (suite == "pencil") pencil(ex);
  else throw UsageError("unknown suite '" + suite + "'");
}

}  // namespace

Report run_suite(const std::string& name, const std::string& example, std::uint64_t seed, std::size_t pencil_samples) {
  bool known = false;
  for (const auto& s : suite_names()) known = known || s == name;
  if (!known) throw UsageError("unknown suite '" + name + "'");
  std::vector<ExampleId> ids;
  if (example == "both" || name == "all") {
    ids = {ExampleId::H45, ExampleId::FKM69};
  } else {
    try {
      ids = {parse_example(example)};
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
  }
  Report report;
  report.suite = name;
  report.seed = seed;
  Runner runner(report, seed, pencil_samples);
  for (ExampleId id : ids) {
    ExampleContext ex(id);
    if (name == "all") {
      for (const auto& s : suite_names())
        if (s != "all") runner.run(s, ex);
    } else {
      runner.run(name, ex);
    }
  }
  if (name == "all" || name == "pencil") {
    runner.group("toy", "pencil.scan", [&] {
      const auto scan = r_lambda_scan(toy_blocks(1, 3), sample_hyperquadric(1, 100, seed));
      const bool ok = scan.histogram.size() == 1 && scan.histogram.count(0) == 1 && scan.histogram.at(0) == 100;
      return CheckList{check("pencil.r_lambda_scan", ok, "A = I, B = C = 0: r = 0 on all 100 samples (k = 1)")};
    });
  }
  return report;
}

}  // namespace isopar
