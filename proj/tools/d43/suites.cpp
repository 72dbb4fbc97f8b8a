#include "suites.hpp"

#include "d43/a2branch.hpp"
#include "d43/appendix.hpp"
#include "d43/coherent.hpp"
#include "d43/fundrep.hpp"
#include "d43/graph_io.hpp"
#include "d43/perfectness.hpp"
#include "d43/rmatrix.hpp"
#include "d43/tensorcat.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <sstream>

namespace d43::cli {

namespace {

class Stopwatch {
 public:
  Stopwatch(Report& r, std::string name) : r_(r), name_(std::move(name)), t0_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    r_.add_timing(name_, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count());
  }

 private:
  Report& r_;
  std::string name_;
  std::chrono::steady_clock::time_point t0_;
};

std::string pair_str(const TensorElem& x) { return x.first.str() + "⊗" + x.second.str(); }

void add_relations(Report& rep, const std::vector<RelationCheck>& checks, const std::string& prefix) {
  for (const auto& c : checks) {
    auto& e = rep.add(prefix + c.name, c.pass, c.pass ? "" : std::to_string(c.residual_nonzeros) + " nonzero residual entries");
    if (!c.pass && !c.residual.empty()) e.data.emplace_back("residual", c.residual);
  }
}

}  // namespace

Report tensor_suite(long l, const RunOptions&) {
  Report rep("tensor");
  Stopwatch sw(rep, "connected");
  const auto r = check_P1(l);
  auto& e = rep.add("B_l⊗B_l connected", r.pass, std::to_string(r.components) + " component(s)");
  e.data.emplace_back("level", std::to_string(l));
  e.data.emplace_back("vertices", std::to_string(r.vertices));
  for (std::size_t k = 0; k < r.representatives.size(); ++k)
    e.data.emplace_back("component " + std::to_string(k), pair_str(r.representatives[k]));
  return rep;
}

Report perfect_suite(long l, long p1_max, const RunOptions&) {
  Report rep("perfect");
  {
    Stopwatch sw(rep, "P1");
    if (l <= p1_max) {
      const auto r = check_P1(l);
      auto& e = rep.add("P1", r.pass, std::to_string(r.vertices) + " vertices, " + std::to_string(r.components) + " component(s)");
      for (std::size_t k = 0; k < r.representatives.size(); ++k)
        e.data.emplace_back("component " + std::to_string(k), pair_str(r.representatives[k]));
    } else {
      rep.add("P1", Status::Skipped, "level above --p1-max " + std::to_string(p1_max));
    }
  }
  {
    Stopwatch sw(rep, "P2");
    const auto r = check_P2(l);
    auto& e = rep.add("P2", r.pass, "lambda0 = " + r.lambda0.str() + ", multiplicity " + std::to_string(r.top_multiplicity));
    for (const auto& o : r.offenders) e.data.emplace_back("offender", o);
  }
  rep.add("P3", Status::Skipped, "existence of a crystal pseudobase is not checked");
  {
    Stopwatch sw(rep, "P4 P5");
    const auto r = check_P4_P5(l);
    std::ostringstream os;
    for (std::size_t k = 0; k < r.minimal.size(); ++k) os << (k ? " " : "") << r.minimal[k].str();
    auto& e = rep.add("P4", r.pass, "level(eps(b)) >= " + std::to_string(l) + " on B_l");
    for (const auto& p : r.problems) e.data.emplace_back("problem", p);
    auto& m = rep.add("P5", r.pass, std::to_string(r.minimal.size()) + " minimal elements");
    m.data.emplace_back("minimal", os.str());
  }
  {
    Stopwatch sw(rep, "psi");
    const auto s = psi_scan(8);
    rep.add("psi >= 0 on [-8,8]^4", s.pass,
            "minimum " + std::to_string(s.minimum) + ", zeros " + std::to_string(s.zeros) +
                (s.homogeneous ? ", homogeneous" : ", not homogeneous"));
    rep.add("psi matches level(phi) - l", psi_matches_level(l));
  }
  return rep;
}

Report rmatrix_suite(bool symbolic_ybe, std::size_t samples, std::uint64_t seed, const RunOptions& opt) {
  Report rep("rmatrix");
  const Rep8 v1 = build_v1();
  RBuild b;
  {
    Stopwatch sw(rep, "build");
    b = build_R(v1);
  }
  std::size_t nnz = 0;
  for (const auto& m : b.R.coeff) nnz += m.nonzeros();
  std::ostringstream dims;
  for (const auto& c : b.components) dims << (dims.tellp() > 0 ? " " : "") << c.basis.size();
  rep.add("components", dims.str() == "27 14 7 7 7 1 1", "dimensions " + dims.str())
      .data.emplace_back("R nonzeros", std::to_string(nnz));
  {
    Stopwatch sw(rep, "intertwiner");
    for (const auto& c : verify_intertwiner(v1, b.R)) rep.add("intertwines " + c.name, c.pass, c.detail);
  }
  {
    Stopwatch sw(rep, "projections");
    for (const auto& c : verify_projections(v1, b)) rep.add(c.name, c.pass, c.detail);
  }
  for (const auto& c : verify_determinants(b.coefficients)) rep.add(c.name, c.pass, c.detail);
  {
    const auto u = verify_unitarity(b);
    rep.add(u.name, u.pass, u.detail);
  }
  {
    const LPoly2 phi = vacuum_eigenvalue(b.R);
    rep.add("vacuum eigenvalue", phi == phi_polynomial(), phi.str());
    rep.add("phi(q^2k) != 0, k <= 10", phi_nonvanishing(phi, 10));
  }
  for (const auto& c : verify_coefficients_by_lowering(v1, b.coefficients)) rep.add(c.name, c.pass, c.detail);
  {
    Stopwatch sw(rep, "yang-baxter");
    if (symbolic_ybe) {
      const auto y = verify_yang_baxter_symbolic(b.R, opt.jobs);
      rep.add("yang-baxter symbolic", y.pass, std::to_string(y.checked) + " grid points");
    } else {
      const auto y = verify_yang_baxter(b.R, ybe_samples(samples, seed), opt.jobs);
      auto& e = rep.add("yang-baxter", y.pass, std::to_string(y.checked) + " sample points");
      if (y.first_failure) {
        const auto& s = *y.first_failure;
        e.data.emplace_back("q", s.q.get_str());
        e.data.emplace_back("x", s.x.get_str());
        e.data.emplace_back("y", s.y.get_str());
        e.data.emplace_back("z", s.z.get_str());
        e.data.emplace_back("residual nonzeros", std::to_string(y.residual_nonzeros));
      }
    }
  }
  return rep;
}

namespace {

void add_identities(Report& rep, const std::vector<IdentityReport>& v) {
  for (const auto& r : v) {
    auto& e = rep.add(r.name, r.ok(), std::to_string(r.checked) + " checked, " + std::to_string(r.failures) + " failures");
    if (!r.first_failure.empty()) e.data.emplace_back("first failure", r.first_failure);
  }
}

}  // namespace

Report appendix_suite(long l_max, const RunOptions& opt) {
  Report rep("appendix");
  Stopwatch sw(rep, "tables");
  add_identities(rep, verify_appendix(l_max, {}, opt.jobs));
  return rep;
}

Report lemmas_suite(long l_max, const RunOptions&) {
  Report rep("lemmas");
  Stopwatch sw(rep, "lemmas");
  add_identities(rep, verify_lemmas(l_max));
  return rep;
}

Report coherent_suite(long level, long box, const RunOptions&) {
  Report rep("coherent");
  {
    Stopwatch sw(rep, "embeddings");
    for (long l = 1; l <= level; ++l)
      for (const auto& m : minimal_elements(l)) {
        const auto r = verify_embedding(l, m);
        auto& e = rep.add("embedding l=" + std::to_string(l) + " b0=" + m.element().str(), r.pass,
                          std::to_string(r.checked) + " elements");
        if (!r.first_failure.empty()) e.data.emplace_back("first failure", r.first_failure);
      }
  }
  {
    Stopwatch sw(rep, "cover");
    const auto c = verify_cover(box);
    auto& e = rep.add("cover R=" + std::to_string(box), c.pass,
                      std::to_string(c.elements) + " elements, l_max " + std::to_string(c.l_max));
    long worst = 0;
    for (const auto& w : c.witnesses) worst = std::max(worst, w.l);
    e.data.emplace_back("largest witnessing l", std::to_string(worst));
    for (const auto& u : c.uncovered) e.data.emplace_back("uncovered", u.str());
  }
  return rep;
}

Report relations_suite(const RunOptions&) {
  Report rep("relations");
  const Rep8 v1 = build_v1();
  {
    Stopwatch sw(rep, "relations");
    add_relations(rep, check_defining_relations(v1), "");
  }
  {
    Stopwatch sw(rep, "polarization");
    try {
      const auto gram = build_polarization(v1);
      std::ostringstream os;
      for (std::size_t k = 0; k < kRepDim; ++k) os << (k ? ", " : "") << gram(k, k).str();
      rep.add("polarization unique", true).data.emplace_back("diagonal", os.str());
      add_relations(rep, check_polarization(v1, gram), "polarization ");
    } catch (const std::logic_error& ex) {
      rep.add("polarization unique", false, ex.what());
    }
  }
  add_relations(rep, check_highest_vectors(v1), "highest ");
  {
    Stopwatch sw(rep, "lowering");
    for (const auto& r : verify_lowering_identities(v1)) {
      auto& e = rep.add("lowering identity " + std::to_string(r.number), r.pass);
      if (!r.pass) e.data.emplace_back("difference", r.difference);
    }
  }
  return rep;
}

Report decompose_suite(long l, const RunOptions&) {
  Report rep("decompose");
  Stopwatch sw(rep, "decompose");
  const auto d = decompose(l);
  rep.add("components", d.components_found == index_set(l).size(),
          std::to_string(d.components_found) + " components, " + std::to_string(d.total) + " elements");
  for (const auto& c : d.components) {
    auto& e = rep.add("component " + c.index.str(), c.isomorphic && c.size == c.expected_size,
                      "size " + std::to_string(c.size));
    e.data.emplace_back("bbar", bbar(c.index).str());
    if (!c.detail.empty()) e.data.emplace_back("detail", c.detail);
  }
  for (const auto& p : d.problems) rep.add("problem", false, p);
  return rep;
}

std::string representation_json() {
  const Rep8 v1 = build_v1();
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["basis"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < kRepDim; ++k) j["basis"].push_back(basis_label(static_cast<int>(k)));
  auto dump = [](const Matrix<QRat>& m) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) a.push_back({r, c, m(r, c).str()});
    return a;
  };
  for (int i = 0; i < 3; ++i) {
    j["e" + std::to_string(i)] = dump(v1.E[i]);
    j["f" + std::to_string(i)] = dump(v1.F[i]);
    j["t" + std::to_string(i)] = dump(v1.T[i]);
  }
  return j.dump(2) + "\n";
}

}  // namespace d43::cli
