#pragma once

// Closed forms for iterated lowering of b̄^{l,i}_{j0,j1} inside B_{>=0}
// (tables A to D), and the operator identities used to prove the A2
// decomposition, checked against literal operator application.

#include "d43/a2branch.hpp"

#include <functional>
#include <string>
#include <vector>

namespace d43 {

/// A: f1^q f0^p b̄.  B: f0^r f1^q f0^p b̄ with j0 = i.
/// C: f0^r f1^q f0^{j0} b̄.  D: f0^{j0+q-2p} f1^q f0^p b̄.
enum class Table { A, B, C, D };
const char* table_name(Table t);

struct TableParams {
  ComponentIndex index;
  long p = 0, q = 0, r = 0;
  std::string str() const;
};

struct CaseValue {
  std::string label;  ///< e.g. "I(ii)"
  CrystalElement x;
};

/// Hook applied to each case value before comparison; used to test that
/// the checker notices a corrupted formula.
using FormulaMutator = std::function<void(Table, const std::string&, CrystalElement&)>;

/// Every case whose range contains the parameters, with its value.
std::vector<CaseValue> table_cases(Table t, const TableParams& prm, const FormulaMutator& mutate = {});
/// The value of the matching case(s); throws std::invalid_argument if no
/// case applies and std::logic_error if overlapping cases disagree.
CrystalElement appendix_formula(Table t, const TableParams& prm);
/// The element obtained by applying the operators literally in B_{>=0}.
MaybeElement table_oracle(Table t, const TableParams& prm);

/// Parameter tuples a table is stated for, at one index. Tables B and C
/// have unbounded r; it is capped at j0 + j1 + l.
std::vector<TableParams> table_domain(Table t, const ComponentIndex& c);
long table_r_cap(const ComponentIndex& c);

struct IdentityReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure{};
  bool ok() const { return failures == 0 && checked > 0; }
};

/// One report per table: formula against oracle for all l <= l_max. A
/// parameter with no applicable case, disagreeing overlapping cases, or an
/// absent oracle value counts as a failure.
std::vector<IdentityReport> verify_appendix(long l_max, const FormulaMutator& mutate = {}, unsigned jobs = 1);

/// The two B_{>=0} lemmas, the involution lemma, and the relations of both
/// proof steps on B_l, for all indices with l <= l_max.
std::vector<IdentityReport> verify_lemmas(long l_max);

}  // namespace d43
