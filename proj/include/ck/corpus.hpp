#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ck/group.hpp"

namespace ck {

struct GroupSpec {
  std::string name;
  int degree = 0;
  std::vector<std::string> generators;  // canonical disjoint-cycle text
  std::vector<std::string> tags;
  bool operator==(const GroupSpec&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Parses the line-oriented group format:
///   group <name> degree <n> gens <cycles>[; <cycles>]* [tags a,b]
/// '#' starts a comment. Duplicate names are rejected.
std::vector<GroupSpec> parse_spec(const std::string& text);

std::string render_spec(const GroupSpec& spec);

Group realize(const GroupSpec& spec, long long cap = order_cap());

/// Built-in constructors. Recognized names: cyclic n, dihedral n (n>=3),
/// symmetric n, alternating n, quaternion 2^k (k>=3), sl23, sl23_semidirect,
/// order54, frobenius_field q (prime power q<=16), frobenius n m,
/// direct products via direct_product_spec.
GroupSpec builtin(const std::string& name, const std::vector<long long>& params = {});

GroupSpec direct_product_spec(const GroupSpec& a, const GroupSpec& b, std::string name = "");

/// Affine map v -> Mv + t on GF(3)^2, with points numbered x + 3y.
Permutation affine_perm_gf3(int m00, int m01, int m10, int m11, int tx, int ty);

struct Corpus {
  std::vector<GroupSpec> specs;
  std::vector<std::shared_ptr<const Group>> groups;

  const Group* find(const std::string& name) const;
  size_t size() const { return groups.size(); }
};

/// The built-in verification corpus: abelian groups, p-groups, symmetric and
/// alternating groups, Frobenius groups, the affine families and mixed
/// direct products.
Corpus default_corpus();

Corpus corpus_from_specs(const std::vector<GroupSpec>& specs, long long cap = order_cap());
Corpus corpus_from_files(const std::vector<std::string>& paths, long long cap = order_cap());

}  // namespace ck
