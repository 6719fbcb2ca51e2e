#include "hhcalc/rewrite.hpp"

#include <algorithm>
#include <iterator>

namespace hhcalc {

namespace {

constexpr std::size_t kStepLimit = 2'000'000;
constexpr std::size_t kCyclicLengthBound = 64;

[[noreturn]] void too_many_steps() {
  throw NonConfluentError("reduction did not terminate within the step limit");
}

void accumulate(std::map<Path, Scalar>& work, const Path& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = work.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) work.erase(it);
}

}  // namespace

PathOrder::PathOrder(const OrderPolicy& policy, std::size_t arrow_count)
    : rank_(arrow_count, 0) {
  if (policy.precedence.empty()) {
    for (std::size_t a = 0; a < arrow_count; ++a) rank_[a] = arrow_count - a;
  } else {
    for (std::size_t k = 0; k < policy.precedence.size(); ++k) {
      rank_.at(policy.precedence[k]) = arrow_count - k;
    }
  }
}

bool PathOrder::greater(const Path& a, const Path& b) const {
  if (a.length() != b.length()) return a.length() > b.length();
  for (std::size_t i = 0; i < a.length(); ++i) {
    const std::size_t ra = rank_[a.arrows()[i]];
    const std::size_t rb = rank_[b.arrows()[i]];
    if (ra != rb) return ra > rb;
  }
  return false;
}

Path PathOrder::leading(const AlgebraElement& e) const {
  if (e.is_zero()) throw DomainError("leading term of zero");
  const Path* best = nullptr;
  for (const auto& [p, c] : e.terms()) {
    if (best == nullptr || greater(p, *best)) best = &p;
  }
  return *best;
}

std::size_t ConfluenceReport::unresolved() const {
  return static_cast<std::size_t>(std::count_if(ambiguities.begin(), ambiguities.end(),
                                                [](const Ambiguity& a) { return !a.resolved(); }));
}

ReductionSystem ReductionSystem::from_presentation(const BoundQuiverPresentation& pres,
                                                   std::vector<std::string>* warnings) {
  ReductionSystem sys(pres.quiver, pres.field, pres.order);
  auto warn = [&](std::size_t i, const std::string& why) {
    if (warnings != nullptr) {
      warnings->push_back("relation " + std::to_string(i + 1) + " " + why + "; dropped");
    }
  };
  if (pres.order.kind == OrderPolicy::Kind::explicit_leading) {
    for (std::size_t i = 0; i < pres.relations.size(); ++i) {
      const AlgebraElement& rel = pres.relations[i];
      const Path& lead = pres.leading.at(i);
      const Scalar c = rel.coefficient(lead);
      if (c.is_zero()) throw ValidationError("designated leading term absent from relation");
      AlgebraElement rest = (rel - AlgebraElement::monomial(lead, c)) * (-c.inverse());
      auto same = std::find_if(sys.rules_.begin(), sys.rules_.end(), [&](const Rule& r) {
        return r.leading == lead && r.rest == rest;
      });
      if (same != sys.rules_.end()) {
        warn(i, "duplicates an earlier rule");
        continue;
      }
      sys.rules_.push_back({lead, std::move(rest)});
    }
    return sys;
  }
  const PathOrder ord(pres.order, pres.quiver.arrow_count());
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    if (!sys.add_relation(sys.normal_form(pres.relations[i]), ord)) {
      warn(i, "reduces to zero");
    }
  }
  sys.interreduce();
  return sys;
}

bool ReductionSystem::add_relation(const AlgebraElement& e, const PathOrder& ord) {
  if (e.is_zero()) return false;
  const Path lead = ord.leading(e);
  const Scalar c = e.coefficient(lead);
  AlgebraElement rest = (e - AlgebraElement::monomial(lead, c)) * (-c.inverse());
  rules_.push_back({lead, std::move(rest)});
  return true;
}

void ReductionSystem::interreduce() {
  if (order_.kind == OrderPolicy::Kind::explicit_leading) return;
  const PathOrder ord(order_, quiver_.arrow_count());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules_.size() && !changed; ++i) {
      for (std::size_t j = 0; j < rules_.size(); ++j) {
        if (i == j || !rules_[i].leading.find_factor(rules_[j].leading)) continue;
        AlgebraElement e = AlgebraElement::monomial(rules_[i].leading, field_.one()) - rules_[i].rest;
        rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(i));
        add_relation(normal_form(e), ord);
        changed = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) rules_[i].rest = normal_form(rules_[i].rest);
}

bool ReductionSystem::find_reducible(const Path& p, std::size_t& rule, std::size_t& offset) const {
  bool found = false;
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    auto pos = p.find_factor(rules_[r].leading);
    if (pos && (!found || *pos < offset)) {
      found = true;
      rule = r;
      offset = *pos;
    }
  }
  return found;
}

bool ReductionSystem::is_irreducible(const Path& p) const {
  std::size_t r = 0;
  std::size_t off = 0;
  return !find_reducible(p, r, off);
}

AlgebraElement ReductionSystem::rewrite_once(const AlgebraElement& e, const Path& term,
                                             std::size_t rule, std::size_t offset) const {
  const Rule& r = rules_.at(rule);
  const Path left = term.slice(quiver_, 0, offset);
  const Path right = term.slice(quiver_, offset + r.leading.length(), term.length());
  const Scalar c = e.coefficient(term);
  AlgebraElement out = e - AlgebraElement::monomial(term, c);
  for (const auto& [p, k] : r.rest.terms()) {
    out.add_term(compose(left, compose(p, right)), c * k);
  }
  return out;
}

AlgebraElement ReductionSystem::normal_form(const AlgebraElement& e) const {
  AlgebraElement out(field_);
  std::map<Path, Scalar> work = e.terms();
  std::size_t steps = 0;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    const Path p = it->first;
    const Scalar c = it->second;
    work.erase(it);
    std::size_t rule = 0;
    std::size_t offset = 0;
    if (!find_reducible(p, rule, offset)) {
      out.add_term(p, c);
      continue;
    }
    if (++steps > kStepLimit) too_many_steps();
    const Rule& r = rules_[rule];
    const Path left = p.slice(quiver_, 0, offset);
    const Path right = p.slice(quiver_, offset + r.leading.length(), p.length());
    for (const auto& [t, k] : r.rest.terms()) accumulate(work, compose(left, compose(t, right)), c * k);
  }
  return out;
}

AlgebraElement ReductionSystem::normal_form(const AlgebraElement& e, std::mt19937_64& rng) const {
  AlgebraElement out(field_);
  std::map<Path, Scalar> work = e.terms();
  std::size_t steps = 0;
  while (!work.empty()) {
    auto it = work.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(rng() % work.size()));
    const Path p = it->first;
    const Scalar c = it->second;
    work.erase(it);
    std::vector<std::pair<std::size_t, std::size_t>> matches;
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      for (auto pos = p.find_factor(rules_[r].leading); pos;
           pos = p.find_factor(rules_[r].leading, *pos + 1)) {
        matches.emplace_back(r, *pos);
      }
    }
    if (matches.empty()) {
      // Later rewrites may regenerate p, so merge rather than finalize blindly.
      out.add_term(p, c);
      continue;
    }
    if (++steps > kStepLimit) too_many_steps();
    const auto [rule, offset] = matches[rng() % matches.size()];
    const Rule& r = rules_[rule];
    const Path left = p.slice(quiver_, 0, offset);
    const Path right = p.slice(quiver_, offset + r.leading.length(), p.length());
    for (const auto& [t, k] : r.rest.terms()) accumulate(work, compose(left, compose(t, right)), c * k);
  }
  return out;
}

ConfluenceReport ReductionSystem::check_confluence(std::ostream* trace) const {
  ConfluenceReport report;
  auto resolve = [&](Ambiguity::Kind kind, std::size_t i, std::size_t j, const Path& word,
                     std::size_t offset) {
    const AlgebraElement w = AlgebraElement::monomial(word, field_.one());
    Ambiguity a{kind,
                i,
                j,
                word,
                offset,
                normal_form(rewrite_once(w, word, i, 0)),
                normal_form(rewrite_once(w, word, j, offset))};
    if (trace != nullptr) {
      *trace << (kind == Ambiguity::Kind::overlap ? "overlap" : "inclusion") << " rules "
             << i + 1 << "," << j + 1 << " at " << word.to_string(quiver_) << ": "
             << (a.left - a.right).to_string(quiver_) << " ; via " << i + 1 << " -> "
             << a.left.to_string(quiver_) << " ; via " << j + 1 << " -> "
             << a.right.to_string(quiver_) << (a.resolved() ? " [resolved]" : " [UNRESOLVED]")
             << '\n';
    }
    if (!a.resolved()) report.confluent = false;
    report.ambiguities.push_back(std::move(a));
  };

  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& li = rules_[i].leading.arrows();
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      const auto& lj = rules_[j].leading.arrows();
      // Overlap: the last k written arrows of L_i are the first k of L_j.
      for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
        if (!std::equal(li.end() - static_cast<std::ptrdiff_t>(k), li.end(), lj.begin())) continue;
        std::vector<std::size_t> word(li.begin(), li.end());
        word.insert(word.end(), lj.begin() + static_cast<std::ptrdiff_t>(k), lj.end());
        resolve(Ambiguity::Kind::overlap, i, j, Path::from_arrows(quiver_, std::move(word)),
                li.size() - k);
      }
      // Inclusion: L_j is a factor of L_i.
      if (i == j) continue;
      if (rules_[i].leading == rules_[j].leading && j < i) continue;
      for (auto pos = rules_[i].leading.find_factor(rules_[j].leading); pos;
           pos = rules_[i].leading.find_factor(rules_[j].leading, *pos + 1)) {
        resolve(Ambiguity::Kind::inclusion, i, j, rules_[i].leading, *pos);
      }
    }
  }
  return report;
}

ReductionSystem ReductionSystem::complete(std::size_t length_bound, std::ostream* trace) const {
  if (order_.kind == OrderPolicy::Kind::explicit_leading) {
    const ConfluenceReport rep = check_confluence(trace);
    if (!rep.confluent) {
      throw NonConfluentError("explicit-order system is not confluent: " +
                              std::to_string(rep.unresolved()) + " unresolved ambiguities");
    }
    return *this;
  }
  ReductionSystem sys = *this;
  sys.interreduce();
  const PathOrder ord(order_, quiver_.arrow_count());
  while (true) {
    const ConfluenceReport rep = sys.check_confluence(trace);
    if (rep.confluent) return sys;
    for (const Ambiguity& a : rep.ambiguities) {
      if (a.resolved()) continue;
      const AlgebraElement s = sys.normal_form(a.left - a.right);
      if (s.is_zero()) continue;
      if (ord.leading(s).length() > length_bound) {
        throw NonConfluentError("completion exceeded the length bound " +
                                std::to_string(length_bound));
      }
      if (trace != nullptr) *trace << "new rule from " << s.to_string(quiver_) << '\n';
      sys.add_relation(s, ord);
    }
    sys.interreduce();
  }
}

QuotientAlgebra QuotientAlgebra::from_presentation(const BoundQuiverPresentation& pres) {
  std::vector<std::string> warnings = pres.warnings;
  ReductionSystem sys = ReductionSystem::from_presentation(pres, &warnings);
  const std::size_t bound =
      pres.quiver.is_acyclic() ? pres.quiver.longest_path_length() : kCyclicLengthBound;
  QuotientAlgebra a = from_system(sys.complete(bound));
  a.warnings_ = std::move(warnings);
  return a;
}

QuotientAlgebra QuotientAlgebra::from_system(ReductionSystem sys) {
  QuotientAlgebra a(std::move(sys));
  const Quiver& q = a.sys_.quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<Path> layer;
  for (std::size_t v = 0; v < nv; ++v) layer.push_back(Path::trivial(v));
  std::size_t len = 0;
  while (!layer.empty()) {
    if (len > kCyclicLengthBound) {
      throw InfiniteDimensionalError("irreducible paths longer than " +
                                     std::to_string(kCyclicLengthBound) + " exist");
    }
    for (const Path& p : layer) a.basis_.push_back(p);
    std::vector<Path> next;
    for (const Path& p : layer) {
      for (std::size_t arr = 0; arr < q.arrow_count(); ++arr) {
        if (q.arrow(arr).source != p.target()) continue;
        Path ext = compose(Path::arrow(q, arr), p);
        if (a.sys_.is_irreducible(ext)) next.push_back(std::move(ext));
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
    ++len;
  }
  const std::size_t n = a.basis_.size();
  for (std::size_t i = 0; i < n; ++i) a.index_.emplace(a.basis_[i], i);
  a.idempotents_.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) a.idempotents_[v] = v;
  a.parallel_.assign(nv * nv, {});
  for (std::size_t i = 0; i < n; ++i) {
    a.parallel_[a.basis_[i].source() * nv + a.basis_[i].target()].push_back(i);
  }
  a.table_.assign(n * n, SparseVector{});
  const Field& f = a.sys_.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Path& bi = a.basis_[i];
      const Path& bj = a.basis_[j];
      if (bi.source() != bj.target()) continue;
      SparseVector& cell = a.table_[i * n + j];
      if (bi.is_trivial()) {
        cell.set(j, f.one());
      } else if (bj.is_trivial()) {
        cell.set(i, f.one());
      } else {
        cell = a.coordinates(AlgebraElement::monomial(compose(bi, bj), f.one()));
      }
    }
  }
  return a;
}

std::size_t QuotientAlgebra::index_of(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw DomainError("path is not a basis element");
  return it->second;
}

std::vector<std::size_t> QuotientAlgebra::radical_basis() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (is_radical(i)) out.push_back(i);
  }
  return out;
}

const std::vector<std::size_t>& QuotientAlgebra::parallel(std::size_t source,
                                                          std::size_t target) const {
  return parallel_.at(source * quiver().vertex_count() + target);
}

std::vector<std::size_t> QuotientAlgebra::grading() const {
  std::vector<std::size_t> out;
  for (const Path& p : basis_) {
    if (out.size() <= p.length()) out.resize(p.length() + 1, 0);
    ++out[p.length()];
  }
  return out;
}

const SparseVector& QuotientAlgebra::product(std::size_t i, std::size_t j) const {
  return table_.at(i * basis_.size() + j);
}

SparseVector QuotientAlgebra::multiply(const SparseVector& a, const SparseVector& b) const {
  SparseVector out;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) {
      const SparseVector& p = product(i, j);
      if (!p.is_zero()) out.axpy(x * y, p);
    }
  }
  return out;
}

SparseVector QuotientAlgebra::coordinates(const AlgebraElement& e) const {
  SparseVector out;
  const AlgebraElement nf = sys_.normal_form(e);
  for (const auto& [p, c] : nf.terms()) out.add(index_of(p), c);
  return out;
}

AlgebraElement QuotientAlgebra::element(const SparseVector& v) const {
  AlgebraElement out(field());
  for (const auto& [i, c] : v) out.add_term(basis_.at(i), c);
  return out;
}

SparseVector QuotientAlgebra::unit() const {
  SparseVector out;
  for (std::size_t v : idempotents_) out.set(v, field().one());
  return out;
}

}  // namespace hhcalc
