// Independent reference implementations and random generators for tests.
// Everything here works on plain string sets, deliberately unlike the
// index/bitmask code in the library.
#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "argwb/adf.hpp"
#include "argwb/document.hpp"
#include "argwb/framework.hpp"
#include "argwb/semantics.hpp"
#include "argwb/whatif.hpp"

namespace ref {

using argwb::ArgId;
using argwb::IdPair;
using argwb::IdSet;
using Rel = std::set<IdPair>;
using Family = std::set<IdSet>;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

inline std::string fixture(const std::string& name) { return read_file(std::string(FIXTURE_DIR) + "/" + name); }

// ---------------------------------------------------------------------------
// Dung semantics by definition

struct Af {
  IdSet args;
  Rel att;
};

inline Af from(const argwb::ArgumentationFramework& f) {
  Af a;
  a.args = f.ids();
  a.att.insert(f.attacks().begin(), f.attacks().end());
  return a;
}

inline bool attacks(const Af& f, const ArgId& x, const ArgId& y) { return f.att.count({x, y}) != 0; }

inline bool conflict_free(const Af& f, const IdSet& s) {
  for (const auto& x : s)
    for (const auto& y : s)
      if (attacks(f, x, y)) return false;
  return true;
}

inline bool defends(const Af& f, const IdSet& s, const ArgId& a) {
  for (const auto& b : f.args) {
    if (!attacks(f, b, a)) continue;
    bool countered = false;
    for (const auto& c : s) countered = countered || attacks(f, c, b);
    if (!countered) return false;
  }
  return true;
}

inline IdSet defended(const Af& f, const IdSet& s) {
  IdSet out;
  for (const auto& a : f.args)
    if (defends(f, s, a)) out.insert(a);
  return out;
}

inline bool admissible(const Af& f, const IdSet& s) {
  if (!conflict_free(f, s)) return false;
  for (const auto& a : s)
    if (!defends(f, s, a)) return false;
  return true;
}

inline bool complete(const Af& f, const IdSet& s) { return conflict_free(f, s) && defended(f, s) == s; }

inline bool stable(const Af& f, const IdSet& s) {
  if (!conflict_free(f, s)) return false;
  for (const auto& a : f.args) {
    if (s.count(a)) continue;
    bool hit = false;
    for (const auto& x : s) hit = hit || attacks(f, x, a);
    if (!hit) return false;
  }
  return true;
}

inline std::vector<IdSet> subsets(const IdSet& args) {
  std::vector<ArgId> v(args.begin(), args.end());
  std::vector<IdSet> out{{}};
  for (const auto& a : v) {
    const auto n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      IdSet s = out[i];
      s.insert(a);
      out.push_back(std::move(s));
    }
  }
  return out;
}

inline IdSet grounded(const Af& f) {
  IdSet s;
  for (;;) {
    IdSet next = defended(f, s);
    if (next == s) return s;
    s = std::move(next);
  }
}

inline Family extensions(const Af& f, argwb::Semantics sem) {
  using argwb::Semantics;
  if (sem == Semantics::Grounded) return {grounded(f)};
  Family out;
  const auto all = subsets(f.args);
  if (sem == Semantics::Complete) {
    for (const auto& s : all)
      if (complete(f, s)) out.insert(s);
  } else if (sem == Semantics::Stable) {
    for (const auto& s : all)
      if (stable(f, s)) out.insert(s);
  } else {
    std::vector<IdSet> adm;
    for (const auto& s : all)
      if (admissible(f, s)) adm.push_back(s);
    for (const auto& s : adm) {
      bool maximal = true;
      for (const auto& t : adm)
        if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) maximal = false;
      if (maximal) out.insert(s);
    }
  }
  return out;
}

inline Family as_family(const std::vector<argwb::Extension>& exts) {
  Family out;
  for (const auto& e : exts) out.insert(e.members);
  return out;
}

// ---------------------------------------------------------------------------
// Bipolar and value-based reductions

inline Rel baf_attacks(const IdSet& args, const Rel& att, const Rel& sup) {
  std::map<IdPair, bool> reach;  // non-empty support path
  for (const auto& p : sup) reach[p] = true;
  for (const auto& k : args)
    for (const auto& i : args)
      for (const auto& j : args)
        if (reach[{i, k}] && reach[{k, j}]) reach[{i, j}] = true;
  Rel out = att;
  for (const auto& [c, t] : att) {
    for (const auto& a : args) {
      if (reach[{a, c}]) out.insert({a, t});  // supported
      if (reach[{t, a}]) out.insert({c, a});  // secondary
    }
  }
  return out;
}

inline Rel vaf_defeats(const Rel& att, const std::map<ArgId, std::string>& value,
                       const std::vector<std::string>& order) {
  auto rank = [&](const std::string& v) { return std::find(order.begin(), order.end(), v) - order.begin(); };
  Rel out;
  for (const auto& [a, b] : att)
    if (!(rank(value.at(b)) < rank(value.at(a)))) out.insert({a, b});
  return out;
}

// ---------------------------------------------------------------------------
// Propositional formulas with their own evaluator

struct Formula {
  enum Op { True, False, Var, Not, And, Or } op = True;
  std::string name;
  std::vector<Formula> kids;
};

enum class Tv { T, F, U };

inline Tv eval(const Formula& f, const std::map<ArgId, Tv>& v) {
  switch (f.op) {
    case Formula::True: return Tv::T;
    case Formula::False: return Tv::F;
    case Formula::Var: return v.at(f.name);
    case Formula::Not: {
      Tv x = eval(f.kids[0], v);
      return x == Tv::T ? Tv::F : x == Tv::F ? Tv::T : Tv::U;
    }
    case Formula::And: {
      Tv a = eval(f.kids[0], v), b = eval(f.kids[1], v);
      if (a == Tv::F || b == Tv::F) return Tv::F;
      return a == Tv::T && b == Tv::T ? Tv::T : Tv::U;
    }
    case Formula::Or: {
      Tv a = eval(f.kids[0], v), b = eval(f.kids[1], v);
      if (a == Tv::T || b == Tv::T) return Tv::T;
      return a == Tv::F && b == Tv::F ? Tv::F : Tv::U;
    }
  }
  return Tv::U;
}

// Fully parenthesised, with a random spelling per operator.
inline std::string render(const Formula& f, std::mt19937_64& rng) {
  auto pick = [&](std::initializer_list<const char*> xs) {
    std::vector<const char*> v(xs);
    return std::string(v[rng() % v.size()]);
  };
  switch (f.op) {
    case Formula::True: return pick({"true", "(true)"});
    case Formula::False: return pick({"false", "(false)"});
    case Formula::Var: return f.name;
    case Formula::Not: return pick({"!", "\xC2\xAC", "not "}) + "(" + render(f.kids[0], rng) + ")";
    case Formula::And:
      return "(" + render(f.kids[0], rng) + pick({" & ", " \xE2\x88\xA7 ", " and ", "&"}) + render(f.kids[1], rng) + ")";
    case Formula::Or:
      return "(" + render(f.kids[0], rng) + pick({" | ", " \xE2\x88\xA8 ", " or ", "|"}) + render(f.kids[1], rng) + ")";
  }
  return "";
}

struct Adf {
  std::vector<ArgId> ids;
  std::map<ArgId, Formula> cond;  // non-external only
  std::map<ArgId, bool> ext;
};

inline std::map<ArgId, Tv> adf_grounded(const Adf& d) {
  std::map<ArgId, Tv> v;
  for (const auto& id : d.ids) v[id] = d.ext.count(id) ? (d.ext.at(id) ? Tv::T : Tv::F) : Tv::U;
  for (bool changed = true; changed;) {
    changed = false;
    auto next = v;
    for (const auto& [id, f] : d.cond) {
      if (v[id] != Tv::U) continue;
      const Tv r = eval(f, v);
      if (r != Tv::U) {
        next[id] = r;
        changed = true;
      }
    }
    v = std::move(next);
  }
  return v;
}

inline std::vector<std::map<ArgId, bool>> adf_models(const Adf& d) {
  std::vector<std::map<ArgId, bool>> out;
  const std::size_t n = d.ids.size();
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::map<ArgId, Tv> v;
    std::map<ArgId, bool> m;
    for (std::size_t i = 0; i < n; ++i) {
      m[d.ids[i]] = (mask >> i) & 1;
      v[d.ids[i]] = m[d.ids[i]] ? Tv::T : Tv::F;
    }
    bool ok = true;
    for (const auto& id : d.ids) {
      if (d.ext.count(id)) ok = ok && d.ext.at(id) == m[id];
      else ok = ok && (eval(d.cond.at(id), v) == Tv::T) == m[id];
    }
    if (ok) out.push_back(m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::size_t below(std::size_t n) { return n == 0 ? 0 : rng() % n; }
  bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }
  template <class T>
  const T& one_of(const std::vector<T>& v) { return v[below(v.size())]; }

  std::vector<ArgId> ids(std::size_t n, const std::string& prefix = "a") {
    std::vector<ArgId> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
  }

  argwb::ArgumentationFramework af(std::size_t n, double density) {
    const auto v = ids(n);
    std::vector<IdPair> att;
    for (const auto& a : v)
      for (const auto& b : v)
        if (chance(density)) att.emplace_back(a, b);
    return argwb::new_framework(IdSet(v.begin(), v.end()), att);
  }

  // Random density so sparse, dense and self-attacking graphs all appear.
  argwb::ArgumentationFramework af(std::size_t max_n) {
    return af(below(max_n + 1), std::uniform_real_distribution<double>(0.05, 0.45)(rng));
  }

  Formula formula(const std::vector<ArgId>& vars, int depth) {
    Formula f;
    const std::size_t roll = below(depth <= 0 ? 3 : 6);
    if (roll == 0 && !vars.empty()) {
      f.op = Formula::Var;
      f.name = one_of(vars);
    } else if (roll <= 1 || vars.empty()) {
      f.op = vars.empty() || chance(0.3) ? (chance(0.5) ? Formula::True : Formula::False) : Formula::Var;
      if (f.op == Formula::Var) f.name = one_of(vars);
    } else if (roll == 2) {
      f.op = Formula::Var;
      f.name = one_of(vars);
    } else if (roll == 3) {
      f.op = Formula::Not;
      f.kids.push_back(formula(vars, depth - 1));
    } else {
      f.op = roll == 4 ? Formula::And : Formula::Or;
      f.kids.push_back(formula(vars, depth - 1));
      f.kids.push_back(formula(vars, depth - 1));
    }
    return f;
  }

  Adf adf(std::size_t max_n) {
    Adf d;
    const std::size_t n = 1 + below(max_n);
    d.ids = ids(n, "v");
    for (const auto& id : d.ids) {
      if (chance(0.2)) d.ext[id] = chance(0.6);
      else d.cond[id] = formula(d.ids, 3);
    }
    return d;
  }

  std::string label() {
    static const std::vector<std::string> words{"claim", "the \"driver\"", "caf\xC3\xA9", "back\\slash",
                                                "tab\there", "line\nbreak", "plain", "\xE2\x88\xA7 sign"};
    return one_of(words) + " " + std::to_string(below(100));
  }

  // Valid document of the given kind.
  argwb::Document document(argwb::DocumentKind kind, std::size_t max_n);
  argwb::Document document(std::size_t max_n) {
    static const std::vector<argwb::DocumentKind> kinds{argwb::DocumentKind::Aaf, argwb::DocumentKind::Baf,
                                                        argwb::DocumentKind::Vaf, argwb::DocumentKind::Adf,
                                                        argwb::DocumentKind::CaseFile};
    return document(one_of(kinds), max_n);
  }

  // Edit plausible for the document; may still be rejected by apply_edit.
  argwb::Edit edit(const argwb::Document& doc);

  std::mt19937_64 rng;
};

inline argwb::Document Gen::document(argwb::DocumentKind kind, std::size_t max_n) {
  using namespace argwb;
  Document d;
  d.kind = kind;
  const std::size_t n = below(max_n + 1);
  const auto v = ids(n, chance(0.5) ? "a" : "Arg");
  static const std::vector<std::string> values{"liberty", "safety", "equity", "privacy"};
  std::vector<std::string> order = values;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = below(1000);
  for (std::size_t i = 0; i < n; ++i) {
    ArgumentRecord r;
    r.id = v[i];
    if (chance(0.5) && kind != DocumentKind::CaseFile) r.label = label();
    if (kind == DocumentKind::Vaf) r.value = one_of(values);
    d.arguments.push_back(std::move(r));
  }
  if (kind == DocumentKind::Adf) {
    for (auto& r : d.arguments) {
      if (chance(0.25)) {
        r.external = chance(0.5);
      } else {
        r.condition = render(formula(v, 2), rng);
      }
    }
  } else if (kind == DocumentKind::CaseFile) {
    for (auto& r : d.arguments) {
      ToulminArgument t;
      t.id = r.id;
      t.claim = label();
      if (chance(0.3)) t.qualifier = "presumably";
      t.premises = {label()};
      if (chance(0.3)) t.premises.push_back(label());
      t.warrant = label();
      if (chance(0.7)) t.backing = label();
      for (const auto& other : v)
        if (chance(0.2)) t.rebuttals.push_back(other);
      r.toulmin = std::move(t);
      if (chance(0.8)) r.party = chance(0.5) ? "claimant" : "respondent";
    }
  } else {
    for (const auto& a : v)
      for (const auto& b : v)
        if (chance(0.2)) d.attacks.emplace_back(a, b);
  }
  if (kind == DocumentKind::Baf) {
    const std::set<IdPair> att(d.attacks.begin(), d.attacks.end());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rank[i] < rank[j] && chance(0.15) && !att.count({v[i], v[j]})) d.supports.emplace_back(v[i], v[j]);
  }
  if (kind == DocumentKind::Vaf) d.value_order = order;
  return canonicalize(d);
}

inline argwb::Edit Gen::edit(const argwb::Document& doc) {
  using namespace argwb;
  const auto ids_set = doc.ids();
  std::vector<ArgId> v(ids_set.begin(), ids_set.end());
  auto any_id = [&]() -> ArgId { return v.empty() ? "a0" : one_of(v); };
  Edit e;
  std::vector<EditOp> ops{EditOp::AddArgument, EditOp::RemoveArgument};
  if (doc.kind != DocumentKind::Adf) ops.insert(ops.end(), {EditOp::AddAttack, EditOp::AddAttack, EditOp::RemoveAttack});
  if (doc.kind == DocumentKind::Baf) ops.insert(ops.end(), {EditOp::AddSupport, EditOp::RemoveSupport});
  if (doc.kind == DocumentKind::Vaf) ops.push_back(EditOp::SetValueOrder);
  if (doc.kind == DocumentKind::Adf) ops.push_back(EditOp::SetExternal);
  e.op = one_of(ops);
  switch (e.op) {
    case EditOp::AddArgument: {
      ArgumentRecord r;
      r.id = "n" + std::to_string(below(20));
      if (chance(0.5)) r.label = label();
      if (doc.kind == DocumentKind::Vaf) r.value = doc.value_order.empty() ? "liberty" : one_of(doc.value_order);
      if (doc.kind == DocumentKind::Adf) {
        std::vector<ArgId> vars = v;
        if (vars.empty() || chance(0.3)) r.external = chance(0.5);
        else r.condition = render(formula(vars, 2), rng);
      }
      if (doc.kind == DocumentKind::CaseFile) {
        ToulminArgument t;
        t.id = r.id;
        t.claim = label();
        t.premises = {label()};
        t.warrant = label();
        r.toulmin = t;
        r.label.reset();
      }
      e.argument = r;
      break;
    }
    case EditOp::RemoveArgument:
    case EditOp::SetExternal:
      e.id = any_id();
      if (e.op == EditOp::SetExternal && chance(0.7)) e.external = chance(0.5);
      break;
    case EditOp::RemoveAttack:
      if (!doc.attacks.empty() && chance(0.8)) {
        e.pair = one_of(doc.attacks);
        break;
      }
      [[fallthrough]];
    case EditOp::AddAttack:
    case EditOp::AddSupport:
      e.pair = {any_id(), any_id()};
      break;
    case EditOp::RemoveSupport:
      e.pair = doc.supports.empty() ? IdPair{any_id(), any_id()} : one_of(doc.supports);
      break;
    case EditOp::SetValueOrder:
      e.order = doc.value_order;
      std::shuffle(e.order.begin(), e.order.end(), rng);
      break;
  }
  return e;
}

}  // namespace ref
