#include "ck/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ck/numtheory.hpp"

namespace ck {

ParseError::ParseError(int line, int col, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                         message),
      line_(line),
      col_(col) {}

namespace {

struct Cursor {
  const std::string& s;
  int line;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  int col() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col(), msg); }

  std::string word() {
    skip_ws();
    const size_t start = pos;
    while (pos < s.size()) {
      const char c = s[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '+')
        ++pos;
      else
        break;
    }
    if (start == pos) fail("expected a word");
    return s.substr(start, pos - start);
  }

  void keyword(const std::string& kw) {
    skip_ws();
    const int at = col();
    const std::string w = word();
    if (w != kw) throw ParseError(line, at, "expected '" + kw + "', found '" + w + "'");
  }

  int integer() {
    skip_ws();
    const size_t start = pos;
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1'000'000) fail("number too large");
      ++pos;
    }
    if (start == pos) fail("expected a number");
    return static_cast<int>(v);
  }

  // A run of parenthesized cycles, e.g. "(0 1 2)(3 4)" or "()".
  std::string cycles_run() {
    skip_ws();
    if (pos >= s.size() || s[pos] != '(') fail("expected '(' starting a cycle list");
    const size_t start = pos;
    while (true) {
      if (pos >= s.size() || s[pos] != '(') break;
      while (pos < s.size() && s[pos] != ')') ++pos;
      if (pos >= s.size()) fail("unterminated cycle");
      ++pos;  // ')'
      const size_t save = pos;
      skip_ws();
      if (pos >= s.size() || s[pos] != '(') {
        pos = save;
        break;
      }
    }
    return s.substr(start, pos - start);
  }
};

std::vector<std::string> split_tags(Cursor& cur) {
  std::vector<std::string> tags;
  for (;;) {
    tags.push_back(cur.word());
    cur.skip_ws();
    if (cur.pos < cur.s.size() && cur.s[cur.pos] == ',') {
      ++cur.pos;
      continue;
    }
    break;
  }
  return tags;
}

}  // namespace

std::vector<GroupSpec> parse_spec(const std::string& text) {
  std::vector<GroupSpec> specs;
  std::map<std::string, int> seen;  // name -> line
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Cursor cur{raw, line_no};
    if (cur.done()) continue;

    cur.keyword("group");
    cur.skip_ws();
    const int name_col = cur.col();
    GroupSpec spec;
    spec.name = cur.word();
    cur.keyword("degree");
    spec.degree = cur.integer();
    if (spec.degree < 1 || spec.degree > 100000)
      throw ParseError(line_no, name_col, "degree must be between 1 and 100000");
    cur.keyword("gens");
    for (;;) {
      cur.skip_ws();
      const int gen_col = cur.col();
      const std::string run = cur.cycles_run();
      try {
        spec.generators.push_back(Permutation::from_cycles(spec.degree, run).cycle_string());
      } catch (const std::invalid_argument& ex) {
        throw ParseError(line_no, gen_col, ex.what());
      }
      cur.skip_ws();
      if (cur.pos < cur.s.size() && cur.s[cur.pos] == ';') {
        ++cur.pos;
        continue;
      }
      break;
    }
    if (!cur.done()) {
      cur.keyword("tags");
      spec.tags = split_tags(cur);
      if (!cur.done()) cur.fail("unexpected trailing text");
    }

    if (const auto [it, inserted] = seen.emplace(spec.name, line_no); !inserted)
      throw ParseError(line_no, name_col,
                       "duplicate group name '" + spec.name + "' (first at line " +
                           std::to_string(it->second) + ")");
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::string render_spec(const GroupSpec& spec) {
  std::ostringstream os;
  os << "group " << spec.name << " degree " << spec.degree << " gens ";
  for (size_t i = 0; i < spec.generators.size(); ++i) {
    if (i) os << "; ";
    os << spec.generators[i];
  }
  if (!spec.tags.empty()) {
    os << " tags ";
    for (size_t i = 0; i < spec.tags.size(); ++i) {
      if (i) os << ',';
      os << spec.tags[i];
    }
  }
  return os.str();
}

Group realize(const GroupSpec& spec, long long cap) {
  std::vector<Permutation> gens;
  for (const auto& text : spec.generators)
    gens.push_back(Permutation::from_cycles(spec.degree, text));
  return Group::generate(std::move(gens), spec.name, cap);
}

namespace {

// GF(q) for small prime powers, elements encoded as base-p digit integers.
struct SmallField {
  int p = 0;
  int k = 1;
  int q = 0;
  std::vector<int> irr;  // monic modulus, length k+1, low first

  explicit SmallField(int order) : q(order) {
    const auto pp = prime_power_info(order);
    if (!pp) throw std::invalid_argument("field order must be a prime power");
    p = static_cast<int>(pp->prime);
    k = pp->exponent;
    switch (q) {
      case 4: irr = {1, 1, 1}; break;          // x^2+x+1 over GF(2)
      case 8: irr = {1, 1, 0, 1}; break;       // x^3+x+1
      case 9: irr = {1, 0, 1}; break;          // x^2+1 over GF(3)
      case 16: irr = {1, 1, 0, 0, 1}; break;   // x^4+x+1
      default:
        if (k != 1) throw std::invalid_argument("unsupported field order");
        irr = {0, 1};
    }
  }

  std::vector<int> digits(int a) const {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  int encode(const std::vector<int>& d) const {
    int a = 0;
    for (int i = k - 1; i >= 0; --i) a = a * p + d[i];
    return a;
  }

  int add(int a, int b) const {
    auto da = digits(a);
    const auto db = digits(b);
    for (int i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
    return encode(da);
  }

  int mul(int a, int b) const {
    if (k == 1) return static_cast<int>(static_cast<long long>(a) * b % p);
    const auto da = digits(a);
    const auto db = digits(b);
    std::vector<int> conv(2 * k - 1, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) conv[i + j] = (conv[i + j] + da[i] * db[j]) % p;
    }
    for (int d = 2 * k - 2; d >= k; --d) {
      const int c = conv[d];
      if (c == 0) continue;
      conv[d] = 0;
      for (int i = 0; i <= k; ++i) {
        const int at = d - k + i;
        conv[at] = ((conv[at] - c * irr[i]) % p + p) % p;
      }
    }
    conv.resize(k);
    return encode(conv);
  }

  int primitive_element() const {
    for (int g = 1; g < q; ++g) {
      int x = g, ord = 1;
      while (x != 1) {
        x = mul(x, g);
        ++ord;
      }
      if (ord == q - 1) return g;
    }
    throw std::logic_error("no primitive field element found");
  }
};

Permutation perm_from_map(int degree, const std::function<int(int)>& f) {
  std::vector<int> images(degree);
  for (int x = 0; x < degree; ++x) images[x] = f(x);
  return Permutation(std::move(images));
}

// Linear action on the 8 nonzero vectors of GF(3)^2; point x + 3y - 1.
Permutation gf3_linear_perm_nonzero(int m00, int m01, int m10, int m11) {
  return perm_from_map(8, [&](int pt) {
    const int v = pt + 1;
    const int x = v % 3, y = v / 3;
    const int nx = (m00 * x + m01 * y) % 3;
    const int ny = (m10 * x + m11 * y) % 3;
    return nx + 3 * ny - 1;
  });
}

GroupSpec spec_from_perms(std::string name, int degree, const std::vector<Permutation>& gens,
                          std::vector<std::string> tags) {
  GroupSpec spec;
  spec.name = std::move(name);
  spec.degree = degree;
  for (const auto& g : gens) spec.generators.push_back(g.cycle_string());
  spec.tags = std::move(tags);
  return spec;
}

void assert_order(const GroupSpec& spec, long long expected) {
  const Group g = realize(spec);
  if (g.order() != expected)
    throw std::logic_error("builtin " + spec.name + ": order " + std::to_string(g.order()) +
                           ", expected " + std::to_string(expected));
}

long long param_at(const std::vector<long long>& params, size_t i, const std::string& who) {
  if (i >= params.size()) throw std::invalid_argument(who + ": missing parameter");
  return params[i];
}

}  // namespace

Permutation affine_perm_gf3(int m00, int m01, int m10, int m11, int tx, int ty) {
  return perm_from_map(9, [&](int pt) {
    const int x = pt % 3, y = pt / 3;
    const int nx = ((m00 * x + m01 * y + tx) % 3 + 3) % 3;
    const int ny = ((m10 * x + m11 * y + ty) % 3 + 3) % 3;
    return nx + 3 * ny;
  });
}

GroupSpec builtin(const std::string& name, const std::vector<long long>& params) {
  if (name == "cyclic") {
    const int n = static_cast<int>(param_at(params, 0, name));
    if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
    std::vector<Permutation> gens;
    if (n == 1) {
      gens.emplace_back(1);
    } else {
      std::vector<int> images(n);
      for (int i = 0; i < n; ++i) images[i] = (i + 1) % n;
      gens.emplace_back(std::move(images));
    }
    std::vector<std::string> tags{"abelian", "cyclic"};
    if (prime_power_info(n)) tags.push_back("p-group");
    auto spec = spec_from_perms("C" + std::to_string(n), std::max(n, 1), gens, std::move(tags));
    assert_order(spec, n);
    return spec;
  }
  if (name == "dihedral") {
    const int n = static_cast<int>(param_at(params, 0, name));
    if (n < 3) throw std::invalid_argument("dihedral: n must be >= 3");
    const auto rot = perm_from_map(n, [&](int x) { return (x + 1) % n; });
    const auto ref = perm_from_map(n, [&](int x) { return (n - x) % n; });
    std::vector<std::string> tags;
    if (prime_power_info(2LL * n)) tags.push_back("p-group");
    auto spec = spec_from_perms("D" + std::to_string(2 * n), n, {rot, ref}, std::move(tags));
    assert_order(spec, 2LL * n);
    return spec;
  }
  if (name == "symmetric") {
    const int n = static_cast<int>(param_at(params, 0, name));
    if (n < 1) throw std::invalid_argument("symmetric: n must be >= 1");
    std::vector<Permutation> gens;
    if (n == 1) {
      gens.emplace_back(1);
    } else {
      gens.push_back(Permutation::from_cycles(n, "(0 1)"));
      if (n > 2) gens.push_back(perm_from_map(n, [&](int x) { return (x + 1) % n; }));
    }
    std::vector<std::string> tags;
    if (n <= 2) tags.push_back("abelian");
    if (n == 3) tags.push_back("dy_family");
    auto spec = spec_from_perms("S" + std::to_string(n), n, gens, std::move(tags));
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    assert_order(spec, fact);
    return spec;
  }
  if (name == "alternating") {
    const int n = static_cast<int>(param_at(params, 0, name));
    if (n < 3) throw std::invalid_argument("alternating: n must be >= 3");
    std::vector<Permutation> gens;
    gens.push_back(Permutation::from_cycles(n, "(0 1 2)"));
    if (n > 3) {
      if (n % 2 == 1) {
        gens.push_back(perm_from_map(n, [&](int x) { return (x + 1) % n; }));
      } else {
        gens.push_back(perm_from_map(n, [&](int x) { return x == 0 ? 0 : x % (n - 1) + 1; }));
      }
    }
    std::vector<std::string> tags;
    if (n == 4) tags.push_back("dy_family");
    auto spec = spec_from_perms("A" + std::to_string(n), n, gens, std::move(tags));
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    assert_order(spec, fact / 2);
    return spec;
  }
  if (name == "quaternion") {
    const long long m = param_at(params, 0, name);
    const auto pp = prime_power_info(m);
    if (!pp || pp->prime != 2 || pp->exponent < 3)
      throw std::invalid_argument("quaternion: order must be 2^k, k >= 3");
    const int half = static_cast<int>(m / 2);
    const int quarter = half / 2;
    // Right-regular action on a^i b^j, point i + half*j.
    const auto a = perm_from_map(static_cast<int>(m), [&](int pt) {
      const int i = pt % half, j = pt / half;
      return j == 0 ? (i + 1) % half : ((i + half - 1) % half) + half;
    });
    const auto b = perm_from_map(static_cast<int>(m), [&](int pt) {
      const int i = pt % half, j = pt / half;
      return j == 0 ? i + half : (i + quarter) % half;
    });
    auto spec = spec_from_perms("Q" + std::to_string(m), static_cast<int>(m), {a, b}, {"p-group"});
    assert_order(spec, m);
    return spec;
  }
  if (name == "sl23") {
    const auto t1 = gf3_linear_perm_nonzero(1, 1, 0, 1);
    const auto t2 = gf3_linear_perm_nonzero(1, 0, 1, 1);
    auto spec = spec_from_perms("SL2_3", 8, {t1, t2}, {});
    assert_order(spec, 24);
    return spec;
  }
  if (name == "sl23_semidirect") {
    const auto t1 = affine_perm_gf3(1, 1, 0, 1, 0, 0);
    const auto t2 = affine_perm_gf3(1, 0, 1, 1, 0, 0);
    const auto tr = affine_perm_gf3(1, 0, 0, 1, 1, 0);
    auto spec = spec_from_perms("ASL2_3", 9, {t1, t2, tr}, {});
    assert_order(spec, 216);
    return spec;
  }
  if (name == "order54") {
    // g = an order-3 element of SL(2,3), z the central involution; the group
    // is <gz> acting on the translation subgroup C3 x C3.
    const auto gz = affine_perm_gf3(2, 2, 0, 2, 0, 0);  // -(unipotent g)
    const auto tr1 = affine_perm_gf3(1, 0, 0, 1, 1, 0);
    const auto tr2 = affine_perm_gf3(1, 0, 0, 1, 0, 1);
    auto spec = spec_from_perms("G54", 9, {gz, tr1, tr2}, {"thmC_witness"});
    assert_order(spec, 54);
    return spec;
  }
  if (name == "frobenius_field") {
    const int q = static_cast<int>(param_at(params, 0, name));
    if (q < 2 || q > 16 || !prime_power_info(q))
      throw std::invalid_argument("frobenius_field: q must be a prime power <= 16");
    const SmallField f(q);
    const int g = f.primitive_element();
    std::vector<Permutation> gens;
    gens.push_back(perm_from_map(q, [&](int x) { return f.add(x, 1); }));
    if (q > 2) gens.push_back(perm_from_map(q, [&](int x) { return f.mul(g, x); }));
    std::vector<std::string> tags;
    if (q > 2)
      tags = {"frobenius", "dy_family"};
    else
      tags = {"abelian"};
    auto spec = spec_from_perms("AGL1_" + std::to_string(q), q, gens, std::move(tags));
    assert_order(spec, static_cast<long long>(q) * (q - 1));
    return spec;
  }
  if (name == "frobenius") {
    const int n = static_cast<int>(param_at(params, 0, name));
    const int m = static_cast<int>(param_at(params, 1, name));
    if (n < 2 || m < 2) throw std::invalid_argument("frobenius: need n, m >= 2");
    int k = 0;
    for (int c = 2; c < n; ++c) {
      if (std::gcd(c, n) != 1) continue;
      int x = c % n, ord = 1;
      while (x != 1) {
        x = static_cast<int>(static_cast<long long>(x) * c % n);
        ++ord;
      }
      if (ord == m) {
        k = c;
        break;
      }
    }
    if (k == 0)
      throw std::invalid_argument("frobenius: no unit of order " + std::to_string(m) + " mod " +
                                  std::to_string(n));
    const auto a = perm_from_map(n, [&](int x) { return (x + 1) % n; });
    const auto b = perm_from_map(n, [&](int x) {
      return static_cast<int>(static_cast<long long>(k) * x % n);
    });
    std::vector<std::string> tags;
    if (is_prime(n)) {
      tags.push_back("frobenius");
      if (m == n - 1) tags.push_back("dy_family");
    }
    auto spec = spec_from_perms("F" + std::to_string(n * m), n, {a, b}, std::move(tags));
    assert_order(spec, static_cast<long long>(n) * m);
    return spec;
  }
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

GroupSpec direct_product_spec(const GroupSpec& a, const GroupSpec& b, std::string name) {
  GroupSpec spec;
  spec.name = name.empty() ? a.name + "x" + b.name : std::move(name);
  spec.degree = a.degree + b.degree;
  for (const auto& text : a.generators) {
    const auto p = Permutation::from_cycles(a.degree, text);
    spec.generators.push_back(
        perm_from_map(spec.degree, [&](int x) { return x < a.degree ? p(x) : x; })
            .cycle_string());
  }
  for (const auto& text : b.generators) {
    const auto p = Permutation::from_cycles(b.degree, text);
    spec.generators.push_back(
        perm_from_map(spec.degree,
                      [&](int x) { return x < a.degree ? x : p(x - a.degree) + a.degree; })
            .cycle_string());
  }
  const auto has = [](const GroupSpec& s, const char* t) {
    return std::find(s.tags.begin(), s.tags.end(), t) != s.tags.end();
  };
  if (has(a, "abelian") && has(b, "abelian")) spec.tags.push_back("abelian");
  return spec;
}

const Group* Corpus::find(const std::string& name) const {
  for (size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].name == name) return groups[i].get();
  }
  return nullptr;
}

Corpus corpus_from_specs(const std::vector<GroupSpec>& specs, long long cap) {
  Corpus corpus;
  for (const auto& spec : specs) {
    if (corpus.find(spec.name)) throw std::invalid_argument("duplicate group name " + spec.name);
    corpus.specs.push_back(spec);
    corpus.groups.push_back(std::make_shared<const Group>(realize(spec, cap)));
  }
  return corpus;
}

Corpus corpus_from_files(const std::vector<std::string>& paths, long long cap) {
  std::vector<GroupSpec> all;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open corpus file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    for (auto& spec : parse_spec(buf.str())) {
      for (const auto& prev : all) {
        if (prev.name == spec.name)
          throw std::invalid_argument("duplicate group name '" + spec.name + "' across files");
      }
      all.push_back(std::move(spec));
    }
  }
  return corpus_from_specs(all, cap);
}

Corpus default_corpus() {
  std::vector<GroupSpec> specs;
  const auto add = [&](GroupSpec spec) { specs.push_back(std::move(spec)); };

  // Abelian groups.
  add(builtin("cyclic", {1}));
  add(builtin("cyclic", {2}));
  add(builtin("cyclic", {6}));
  add(builtin("cyclic", {8}));
  add(builtin("cyclic", {12}));
  add(direct_product_spec(builtin("cyclic", {2}), builtin("cyclic", {4})));
  add(direct_product_spec(builtin("cyclic", {3}), builtin("cyclic", {3})));
  add(direct_product_spec(direct_product_spec(builtin("cyclic", {4}), builtin("cyclic", {2})),
                          builtin("cyclic", {2}), "C4xC2xC2"));

  // Nonabelian p-groups.
  add(builtin("dihedral", {4}));
  add(builtin("quaternion", {8}));
  add(builtin("quaternion", {16}));
  {
    // Extraspecial 3^(1+2) of exponent 3: a transvection acting on the
    // translations of GF(3)^2.
    const auto u = affine_perm_gf3(1, 1, 0, 1, 0, 0);
    const auto tr1 = affine_perm_gf3(1, 0, 0, 1, 1, 0);
    const auto tr2 = affine_perm_gf3(1, 0, 0, 1, 0, 1);
    auto spec = spec_from_perms("ES27", 9, {u, tr1, tr2}, {"p-group", "extraspecial"});
    assert_order(spec, 27);
    add(std::move(spec));
  }

  // Dihedral groups.
  add(builtin("dihedral", {5}));
  add(builtin("dihedral", {6}));
  add(builtin("dihedral", {9}));

  // Symmetric and alternating groups.
  add(builtin("symmetric", {3}));
  add(builtin("symmetric", {4}));
  add(builtin("symmetric", {5}));
  add(builtin("symmetric", {6}));
  add(builtin("alternating", {4}));
  add(builtin("alternating", {5}));
  add(builtin("alternating", {6}));

  // Linear and affine groups over GF(3).
  add(builtin("sl23"));
  add(builtin("sl23_semidirect"));
  add(builtin("order54"));
  {
    // Q8 inside SL(2,3) acting on the translations: a Frobenius group.
    const auto qi = affine_perm_gf3(0, 2, 1, 0, 0, 0);
    const auto qj = affine_perm_gf3(1, 1, 1, 2, 0, 0);
    const auto tr = affine_perm_gf3(1, 0, 0, 1, 1, 0);
    auto spec = spec_from_perms("Q8C3C3", 9, {qi, qj, tr}, {"frobenius", "dy_family"});
    assert_order(spec, 72);
    add(std::move(spec));
  }

  // Affine groups of fields.
  for (int q : {3, 4, 5, 7, 8, 9, 16}) add(builtin("frobenius_field", {q}));

  // Other Frobenius groups.
  add(builtin("frobenius", {7, 3}));
  add(builtin("frobenius", {5, 4}));

  // Mixed direct products.
  add(direct_product_spec(builtin("cyclic", {3}), builtin("dihedral", {5})));
  add(direct_product_spec(builtin("cyclic", {2}), builtin("quaternion", {8})));
  add(direct_product_spec(builtin("cyclic", {3}), builtin("symmetric", {3})));
  add(direct_product_spec(builtin("cyclic", {2}), builtin("alternating", {4})));
  add(direct_product_spec(builtin("symmetric", {3}), builtin("symmetric", {3})));

  return corpus_from_specs(specs);
}

}  // namespace ck
