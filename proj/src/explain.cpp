#include "argwb/explain.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace argwb {

namespace {

std::string join(const std::vector<ArgId>& ids, const char* sep = ",") {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : sep) + id;
  return out;
}

std::string bracket(const IdSet& ids) {
  return "[" + join(std::vector<ArgId>(ids.begin(), ids.end())) + "]";
}

Label label_of(TriValue v) {
  return v == TriValue::T ? Label::In : v == TriValue::F ? Label::Out : Label::Undec;
}

std::string_view semantics_name(Semantics sem) {
  switch (sem) {
    case Semantics::Grounded: return "grounded";
    case Semantics::Complete: return "complete";
    case Semantics::Preferred: return "preferred";
    case Semantics::Stable: return "stable";
  }
  return "?";
}

}  // namespace

StatusReport status_report(const ArgumentationFramework& f, Semantics sem) {
  StatusReport report;
  report.semantics = sem;
  const Labelling grounded = grounded_labelling(f);
  report.extensions = sem == Semantics::Grounded ? std::vector<Extension>{grounded_extension(f)}
                                                 : enumerate_extensions(f, sem);
  report.no_stable_extension = sem == Semantics::Stable && report.extensions.empty();

  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& arg = f.arguments()[i];
    StatusEntry e;
    e.id = arg.id;
    e.label = arg.label;
    e.status = grounded.at(arg.id);
    auto member = [&](const Extension& x) { return x.members.count(arg.id) != 0; };
    e.credulous = std::any_of(report.extensions.begin(), report.extensions.end(), member);
    e.skeptical = std::all_of(report.extensions.begin(), report.extensions.end(), member);

    std::set<ArgId> defenders;
    for (auto b : f.attackers_of(i)) {
      if (grounded.at(f.id_at(b)) == Label::In) e.defeaters.push_back(f.id_at(b));
      for (auto c : f.attackers_of(b))
        if (grounded.at(f.id_at(c)) == Label::In) defenders.insert(f.id_at(c));
    }
    e.defenders.assign(defenders.begin(), defenders.end());
    report.entries.push_back(std::move(e));
  }
  return report;
}

StatusReport status_report(const DialecticalFramework& d) {
  StatusReport report;
  report.semantics = Semantics::Grounded;
  report.adf = true;
  const TriAssignment v = adf_grounded(d);
  IdSet accepted;
  for (const auto& [id, value] : v)
    if (value == TriValue::T) accepted.insert(id);
  report.extensions.push_back(Extension{accepted, Semantics::Grounded});

  for (const auto& arg : d.arguments()) {
    StatusEntry e;
    e.id = arg.id;
    e.label = arg.label;
    e.truth = v.at(arg.id);
    e.status = label_of(*e.truth);
    e.credulous = e.skeptical = *e.truth == TriValue::T;
    e.external = d.external(arg.id);
    if (const Condition* c = d.condition(arg.id)) {
      e.condition = serialize(*c);
      IdSet positive, negative;
      c->polarity(positive, negative);
      const IdSet refs = c->references();
      e.parents.assign(refs.begin(), refs.end());
      for (const auto& id : negative)
        if (v.at(id) == TriValue::T) e.defeaters.push_back(id);
      for (const auto& id : positive)
        if (v.at(id) == TriValue::T) e.defenders.push_back(id);
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

namespace {

class TreeBuilder {
 public:
  explicit TreeBuilder(const ArgumentationFramework& f) : f_(f), rounds_(grounded_rounds(f)) {}

  DisputeNode proponent(std::size_t a, std::vector<std::size_t>& branch) {
    DisputeNode node{f_.id_at(a), Role::Proponent, true, {}};
    for (auto o : f_.attackers_of(a)) {
      DisputeNode opp{f_.id_at(o), Role::Opponent, true, {}};
      if (auto d = pick_defender(a, o, branch)) {
        branch.push_back(*d);
        DisputeNode answer = proponent(*d, branch);
        branch.pop_back();
        opp.won = !answer.won;
        opp.children.push_back(std::move(answer));
      }
      if (opp.won) {
        node.won = false;
        unanswered_.insert(opp.argument);
      }
      node.children.push_back(std::move(opp));
    }
    return node;
  }

  std::vector<ArgId> unanswered() const { return {unanswered_.begin(), unanswered_.end()}; }

 private:
  // Earliest-round grounded attacker of `o`, strictly earlier than `a` when
  // `a` itself is grounded, and not yet used by the proponent on this branch.
  std::optional<std::size_t> pick_defender(std::size_t a, std::size_t o,
                                           const std::vector<std::size_t>& branch) const {
    std::optional<std::size_t> best;
    for (auto d : f_.attackers_of(o)) {
      if (rounds_[d] == 0) continue;
      if (rounds_[a] != 0 && rounds_[d] >= rounds_[a]) continue;
      if (std::find(branch.begin(), branch.end(), d) != branch.end()) continue;
      if (!best || rounds_[d] < rounds_[*best]) best = d;
    }
    return best;
  }

  const ArgumentationFramework& f_;
  std::vector<int> rounds_;
  std::set<ArgId> unanswered_;
};

void render_node(std::ostringstream& out, const DisputeNode& n, int depth) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ')
      << (n.role == Role::Proponent ? "PRO " : "OPP ") << n.argument;
  if (n.role == Role::Proponent) out << (n.won ? "  [defended]" : "  [undefended]");
  else out << (n.won ? "  [unanswered]" : "  [answered]");
  out << '\n';
  for (const auto& c : n.children) render_node(out, c, depth + 1);
}

}  // namespace

DisputeTree dispute_tree(const ArgumentationFramework& f, const ArgId& root) {
  const std::size_t a = f.index_of(root);
  TreeBuilder builder(f);
  std::vector<std::size_t> branch{a};
  DisputeTree tree;
  tree.root = builder.proponent(a, branch);
  tree.proponent_wins = tree.root.won;
  tree.unanswered = builder.unanswered();
  return tree;
}

std::optional<Verbosity> parse_verbosity(const std::string& text) {
  if (text == "summary") return Verbosity::Summary;
  if (text == "detailed") return Verbosity::Detailed;
  if (text == "full") return Verbosity::Full;
  return std::nullopt;
}

std::string render_text(const StatusReport& report, Verbosity verbosity) {
  std::ostringstream out;
  if (report.adf) {
    out << "semantics: adf grounded (strong Kleene)\n";
  } else {
    out << "semantics: " << semantics_name(report.semantics) << " (" << report.extensions.size()
        << (report.extensions.size() == 1 ? " extension" : " extensions") << ")\n";
    for (std::size_t i = 0; i < report.extensions.size(); ++i)
      out << "  extension " << i + 1 << ": " << bracket(report.extensions[i].members) << '\n';
    if (report.no_stable_extension)
      out << "  no stable extension exists; skeptical acceptance holds vacuously\n";
  }

  std::map<ArgId, TriValue> truths;
  for (const auto& e : report.entries)
    if (e.truth) truths[e.id] = *e.truth;

  for (const auto& e : report.entries) {
    out << e.id << ": ";
    if (report.adf) {
      out << (*e.truth == TriValue::T ? "accepted" : *e.truth == TriValue::F ? "rejected" : "undecided")
          << " (" << to_string(*e.truth) << ")";
      if (e.external) out << " [external evidence]";
    } else if (report.semantics == Semantics::Grounded) {
      out << (e.status == Label::In ? "accepted" : e.status == Label::Out ? "rejected" : "undecided")
          << " (" << to_string(e.status) << ")";
    } else {
      out << (e.skeptical ? "skeptically accepted" : e.credulous ? "credulously accepted" : "rejected")
          << " (grounded " << to_string(e.status) << ")";
    }
    out << '\n';
    if (verbosity == Verbosity::Summary) continue;

    if (e.label) out << "    \"" << *e.label << "\"\n";
    if (report.adf) {
      if (e.external && !e.condition)
        out << "    established externally as " << (*e.external ? "true" : "false") << '\n';
      if (e.condition) out << "    condition: " << *e.condition << '\n';
      if (!e.defeaters.empty()) out << "    blocked by accepted: " << join(e.defeaters, ", ") << '\n';
      if (!e.defenders.empty()) out << "    supported by accepted: " << join(e.defenders, ", ") << '\n';
    } else {
      if (!e.defeaters.empty()) out << "    defeated by: " << join(e.defeaters, ", ") << '\n';
      if (!e.defenders.empty()) out << "    defended by: " << join(e.defenders, ", ") << '\n';
      if (report.semantics != Semantics::Grounded && e.credulous && !e.skeptical) {
        for (std::size_t i = 0; i < report.extensions.size(); ++i)
          if (report.extensions[i].members.count(e.id))
            out << "    member of extension " << i + 1 << '\n';
      }
    }
    if (verbosity == Verbosity::Full && report.adf && e.condition) {
      std::vector<std::string> parts;
      for (const auto& id : e.parents) parts.push_back(id + "=" + std::string(to_string(truths.at(id))));
      if (!parts.empty()) out << "    parent values: " << join(parts, ", ") << '\n';
    }
  }
  return out.str();
}

std::string render_text(const DisputeTree& tree) {
  std::ostringstream out;
  render_node(out, tree.root, 0);
  if (tree.proponent_wins)
    out << "proponent wins: " << tree.root.argument << " is in the grounded extension\n";
  else
    out << "proponent loses: unanswered " << join(tree.unanswered, ", ") << '\n';
  return out.str();
}

}  // namespace argwb
