#include "smtk/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "smtk/error.hpp"

namespace smtk {

RewriteSystem::RewriteSystem(std::vector<Rule> rules) {
  for (Rule& r : rules) add(std::move(r));
}

void RewriteSystem::add(Rule rule) {
  if (!shortlex_less(rule.rhs, rule.lhs)) {
    throw std::invalid_argument("rewrite rule must satisfy rhs < lhs in short-lex");
  }
  rules_.push_back(std::move(rule));
  reindex();
}

void RewriteSystem::reindex() {
  by_last_.assign(256, {});
  for (std::size_t i = 0; i < rules_.size(); ++i) by_last_[rules_[i].lhs.back()].push_back(i);
}

Word RewriteSystem::reduce(const Word& w) const {
  if (rules_.empty()) return w;
  std::string out;
  out.reserve(w.size());
  std::string todo(w.raw().rbegin(), w.raw().rend());
  while (!todo.empty()) {
    char c = todo.back();
    todo.pop_back();
    out.push_back(c);
    for (std::size_t idx : by_last_[static_cast<unsigned char>(c)]) {
      const std::string& lhs = rules_[idx].lhs.raw();
      if (lhs.size() <= out.size() &&
          out.compare(out.size() - lhs.size(), lhs.size(), lhs) == 0) {
        out.resize(out.size() - lhs.size());
        const std::string& rhs = rules_[idx].rhs.raw();
        todo.append(rhs.rbegin(), rhs.rend());
        break;
      }
    }
  }
  return Word::from_raw(std::move(out));
}

bool RewriteSystem::is_irreducible(const Word& w) const {
  for (const Rule& r : rules_) {
    if (w.find(r.lhs) != Word::npos) return false;
  }
  return true;
}

std::vector<Word> RewriteSystem::reduction_trace(const Word& w) const {
  std::vector<Word> trace{w};
  if (rules_.empty()) return trace;
  std::string out;
  std::string todo(w.raw().rbegin(), w.raw().rend());
  while (!todo.empty()) {
    char c = todo.back();
    todo.pop_back();
    out.push_back(c);
    for (std::size_t idx : by_last_[static_cast<unsigned char>(c)]) {
      const std::string& lhs = rules_[idx].lhs.raw();
      if (lhs.size() <= out.size() &&
          out.compare(out.size() - lhs.size(), lhs.size(), lhs) == 0) {
        out.resize(out.size() - lhs.size());
        const std::string& rhs = rules_[idx].rhs.raw();
        todo.append(rhs.rbegin(), rhs.rend());
        trace.push_back(Word::from_raw(out + std::string(todo.rbegin(), todo.rend())));
        break;
      }
    }
  }
  return trace;
}

std::vector<std::pair<Word, Word>> critical_pairs(const RewriteSystem& system) {
  std::vector<std::pair<Word, Word>> out;
  const auto& rules = system.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& l1 = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l2 = rules[j].lhs;
      // Proper overlaps: a suffix of l1 equal to a prefix of l2.
      std::size_t max_k = std::min(l1.size(), l2.size());
      for (std::size_t k = 1; k < max_k; ++k) {
        if (l1.suffix(k) == l2.prefix(k)) {
          out.emplace_back(rules[i].rhs + l2.sub(k), l1.prefix(l1.size() - k) + rules[j].rhs);
        }
      }
      // Containment: l2 occurs inside l1.
      if (i != j && l2.size() <= l1.size()) {
        for (std::size_t p = l1.find(l2); p != Word::npos; p = l1.find(l2, p + 1)) {
          out.emplace_back(rules[i].rhs, l1.replaced(p, l2.size(), rules[j].rhs));
        }
      }
    }
  }
  return out;
}

namespace {

struct Completion {
  const CompletionLimits& limits;
  RewriteSystem system;
  std::deque<Relation> pending;
  std::string reason;

  // Orients and adds pending equations, keeping the system interreduced.
  bool drain() {
    while (!pending.empty()) {
      auto [u, v] = std::move(pending.front());
      pending.pop_front();
      u = system.reduce(u);
      v = system.reduce(v);
      if (u == v) continue;
      if (shortlex_less(u, v)) std::swap(u, v);
      if (u.size() > limits.max_rule_length) {
        reason = "rule length limit exceeded";
        return false;
      }
      std::vector<Rule> kept;
      for (const Rule& r : system.rules()) {
        if (r.lhs.find(u) != Word::npos) {
          pending.emplace_back(r.lhs, r.rhs);
        } else {
          kept.push_back(r);
        }
      }
      kept.push_back({u, v});
      RewriteSystem next(std::move(kept));
      std::vector<Rule> normalised;
      normalised.reserve(next.size());
      for (const Rule& r : next.rules()) normalised.push_back({r.lhs, next.reduce(r.rhs)});
      system = RewriteSystem(std::move(normalised));
      if (system.size() > limits.max_rules) {
        reason = "rule count limit exceeded";
        return false;
      }
    }
    return true;
  }
};

}  // namespace

CompletionOutcome knuth_bendix(const std::vector<Relation>& relations,
                               const CompletionLimits& limits) {
  Completion c{limits, {}, {relations.begin(), relations.end()}, {}};
  CompletionOutcome outcome;
  auto finish = [&](CompletionStatus status) {
    outcome.status = status;
    outcome.stats.rule_count = c.system.size();
    outcome.system = std::move(c.system);
    outcome.reason = std::move(c.reason);
    return std::move(outcome);
  };

  if (!c.drain()) return finish(CompletionStatus::TimedOut);
  while (true) {
    if (outcome.stats.iterations >= limits.max_iterations) {
      c.reason = "iteration limit exceeded";
      return finish(CompletionStatus::TimedOut);
    }
    ++outcome.stats.iterations;
    auto pairs = critical_pairs(c.system);
    outcome.stats.critical_pairs_processed += pairs.size();
    std::vector<Relation> fresh;
    for (auto& [p, q] : pairs) {
      Word rp = c.system.reduce(p);
      Word rq = c.system.reduce(q);
      if (rp != rq) fresh.emplace_back(std::move(rp), std::move(rq));
    }
    if (fresh.empty()) return finish(CompletionStatus::Completed);
    std::stable_sort(fresh.begin(), fresh.end(), [](const Relation& a, const Relation& b) {
      return std::max(a.first.size(), a.second.size()) <
             std::max(b.first.size(), b.second.size());
    });
    c.pending.insert(c.pending.end(), fresh.begin(), fresh.end());
    if (!c.drain()) return finish(CompletionStatus::TimedOut);
  }
}

CompletionOutcome knuth_bendix(const SpecialPresentation& pres, const CompletionLimits& limits) {
  return knuth_bendix(pres.relations(), limits);
}

}  // namespace smtk
