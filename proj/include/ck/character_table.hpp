#pragma once

#include <complex>
#include <vector>

#include "ck/classes.hpp"
#include "ck/cyclotomic.hpp"
#include "ck/group.hpp"

namespace ck {

struct CharacterRow {
  long long degree = 0;
  std::vector<CycValue> values;  // one per class
  bool linear = false;
  std::vector<int> kernel_classes;  // classes where the value equals the degree
};

/// Exact irreducible character table. Rows are ordered by degree, then
/// lexicographically on the rendered complex value tuples.
class CharacterTable {
 public:
  CharacterTable(const Group& g, const ClassData& cd, long long e, long long p,
                 std::vector<CharacterRow> rows);

  const Group& group() const { return *g_; }
  const ClassData& class_data() const { return *cd_; }
  long long exponent() const { return e_; }
  long long dixon_prime() const { return p_; }

  int row_count() const { return static_cast<int>(rows_.size()); }
  const CharacterRow& row(int r) const { return rows_[r]; }
  const std::vector<CharacterRow>& rows() const { return rows_; }
  const CycValue& value(int r, int class_idx) const { return rows_[r].values[class_idx]; }
  CycValue evaluate(int r, int element_idx) const {
    return rows_[r].values[cd_->class_of(element_idx)];
  }

 private:
  const Group* g_;
  const ClassData* cd_;
  long long e_;
  long long p_;
  std::vector<CharacterRow> rows_;
};

long long exponent(const Group& g);

/// Smallest prime p with p = 1 (mod exponent) and p > 2*ceil(sqrt(|G|)),
/// which makes degrees and root multiplicities lift uniquely.
long long dixon_prime(const Group& g);

using ModMatrix = std::vector<std::vector<long long>>;

/// M_i with (M_i)_{jk} = a_{ijk} mod p; the class-algebra characters are
/// their common right eigenvectors.
std::vector<ModMatrix> class_matrices(const ClassData& cd, long long p);

/// Splits GF(p)^r under the commuting class matrices into r common
/// eigenspaces; returns the eigenvectors normalized to coordinate 1 on the
/// identity class (the class-algebra character values mod p).
std::vector<std::vector<long long>> eigensplit(const std::vector<ModMatrix>& mats, long long p);

CharacterTable lift_characters(const std::vector<std::vector<long long>>& omegas, const Group& g,
                               const ClassData& cd, long long p, long long e);

CharacterTable build_character_table(const Group& g, const ClassData& cd);

/// Numeric rendering; decimals >= 0 rounds for display.
std::complex<double> render_complex(const CycValue& v, int decimals = -1);

}  // namespace ck
