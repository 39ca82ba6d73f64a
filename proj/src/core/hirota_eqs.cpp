#include "tropkp/hirota_eqs.hpp"

#include <algorithm>
#include <sstream>

#include "tropkp/subsets.hpp"
#include "tropkp/tau_kp.hpp"

namespace tropkp {

std::vector<SquaredPoint> squared_set(int k, int n) {
  if (n < 2 || k < 1 || k > n - 1) throw InvalidArgument("squared_set needs 1 <= k <= n - 1");
  auto labels = k_subsets(n, k);
  std::map<IntVec, SquaredPoint> acc;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    IntVec ia = indicator(labels[a], n);
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      IntVec d = indicator(labels[b], n);
      for (int i = 0; i < n; ++i) d[i] += ia[i];
      auto& sp = acc[d];
      sp.d = d;
      sp.pairs.emplace_back(labels[a], labels[b]);
    }
  }
  std::vector<SquaredPoint> out;
  for (auto& [d, sp] : acc) {
    sp.two_count = static_cast<int>(std::count(d.begin(), d.end(), 2));
    out.push_back(std::move(sp));
  }
  return out;
}

namespace {

QuarticRelation relation_of(const SquaredPoint& sp) {
  const int n = static_cast<int>(sp.d.size());
  QuarticRelation rel;
  rel.representative = sp.d;
  for (int i = 0; i < n; ++i)
    if (sp.d[i] == 1) rel.direction.push_back(i + 1);
  for (const auto& [a, b] : sp.pairs) {
    QuarticTerm t;
    bool a_first = std::binary_search(a.begin(), a.end(), rel.direction.front());
    t.first = a_first ? a : b;
    t.second = a_first ? b : a;
    IntVec x = indicator(t.first, n), y = indicator(t.second, n);
    for (int i = 0; i < n; ++i) t.delta.push_back(x[i] - y[i]);
    rel.terms.push_back(std::move(t));
  }
  std::sort(rel.terms.begin(), rel.terms.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return rel;
}

}  // namespace

std::vector<QuarticRelation> point_relations(int k, int n) {
  std::vector<QuarticRelation> out;
  for (const auto& sp : squared_set(k, n)) out.push_back(relation_of(sp));
  return out;
}

std::vector<QuarticRelation> face_direction_classes(int k, int n) {
  std::map<IntVec, QuarticRelation> by_dir;
  for (const auto& sp : squared_set(k, n)) {
    QuarticRelation rel = relation_of(sp);
    auto it = by_dir.find(rel.direction);
    if (it == by_dir.end() || rel.representative < it->second.representative) by_dir[rel.direction] = std::move(rel);
  }
  std::vector<QuarticRelation> out;
  for (auto& [dir, rel] : by_dir) out.push_back(std::move(rel));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.direction.size() != b.direction.size()) return a.direction.size() < b.direction.size();
    return a.direction < b.direction;
  });
  return out;
}

Rational evaluate_relation(const QuarticRelation& rel, const HirotaPoint& hp) {
  auto fetch = [&](const IntVec& J) -> std::pair<const Rational&, const IntVec&> {
    auto a = hp.alphas.find(J);
    auto c = hp.lattice.find(J);
    if (a == hp.alphas.end() || c == hp.lattice.end())
      throw InvalidArgument("label " + to_string(std::span<const long>(J)) + " is not a basis of the Hirota point");
    return {a->second, c->second};
  };
  Rational total = 0;
  for (const auto& t : rel.terms) {
    auto [a1, c1] = fetch(t.first);
    auto [a2, c2] = fetch(t.second);
    IntVec dc(c1.size());
    for (std::size_t i = 0; i < dc.size(); ++i) dc[i] = c1[i] - c2[i];
    total += a1 * a2 * hirota_P(dot(dc, hp.uvw.U), dot(dc, hp.uvw.V), dot(dc, hp.uvw.W));
  }
  return total;
}

std::vector<Rational> instantiate_and_check(const std::vector<QuarticRelation>& rels, const HirotaPoint& hp) {
  std::vector<Rational> out;
  for (const auto& r : rels) {
    if (static_cast<int>(r.representative.size()) != hp.n)
      throw InvalidArgument("relation and Hirota point differ in n");
    out.push_back(evaluate_relation(r, hp));
  }
  return out;
}

IntVec label_sum_to_lattice(const IntVec& d, const IntVec& s) {
  if (d.size() != s.size() || d.size() < 2) throw InvalidArgument("label sum and shift vector sizes differ");
  // B^T c = (sum c, -c_1, ..., -c_g), so c_i = -(d - 2s)_{i+1}.
  IntVec c(d.size() - 1);
  long total = d[0] - 2 * s[0];
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    c[i] = -(d[i + 1] - 2 * s[i + 1]);
    total -= c[i];
  }
  if (total != 0) throw InvalidArgument("label sum " + to_string(std::span<const long>(d)) + " is not a lattice image");
  return c;
}

std::map<IntVec, Rational> relation_values_by_lattice(const HirotaPoint& hp) {
  if (hp.alphas.empty()) throw InvalidArgument("empty Hirota point");
  const int n = hp.n;
  const int size = static_cast<int>(hp.alphas.begin()->first.size());
  // Shift vector of the anchor: the label of the zero lattice point.
  IntVec s;
  for (const auto& [J, c] : hp.lattice)
    if (std::all_of(c.begin(), c.end(), [](long v) { return v == 0; })) s = indicator(J, n);
  if (s.empty()) throw InternalError("Hirota point has no label for the zero lattice point");
  // v2 labels are complements, so B^T c = s - 1_label there.
  const long sign = hp.vertex_choice == GraphVertex::V1 ? 1 : -1;
  std::map<IntVec, Rational> out;
  for (const auto& rel : point_relations(size, n)) {
    IntVec c = label_sum_to_lattice(rel.representative, s);
    for (auto& x : c) x *= sign;
    out[c] = evaluate_relation(rel, hp);
  }
  return out;
}

namespace {

std::string linear_form(char sym, const IntVec& delta) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (!delta[i]) continue;
    if (delta[i] > 0 && !first) os << '+';
    if (delta[i] < 0) os << '-';
    if (std::abs(delta[i]) != 1) os << std::abs(delta[i]) << '*';
    os << sym << (i + 1);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string polynomial_string(const QuarticRelation& rel, int n) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rel.terms.size(); ++i) {
    const auto& t = rel.terms[i];
    std::string u = linear_form('U', t.delta), v = linear_form('V', t.delta), w = linear_form('W', t.delta);
    if (i) os << '+';
    os << 'a' << bit_string(t.first, n) << "*a" << bit_string(t.second, n) << "*((" << u << ")^4-4*(" << u << ")*("
       << w << ")+3*(" << v << ")^2)";
  }
  return os.str();
}

nlohmann::json to_json(const QuarticRelation& rel, int n) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : rel.terms)
    terms.push_back({{"first", bit_string(t.first, n)}, {"second", bit_string(t.second, n)}, {"delta", t.delta}});
  return {{"direction", rel.direction},
          {"dimension", rel.dimension()},
          {"representative", rel.representative},
          {"terms", terms},
          {"polynomial", polynomial_string(rel, n)}};
}

}  // namespace tropkp
