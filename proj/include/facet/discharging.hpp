#pragma once

// Charges on vertices and faces, the five redistribution rules, and the
// audit that combines final charges with the structure report.

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "facet/embedding.hpp"
#include "facet/error.hpp"
#include "facet/structure.hpp"

namespace facet {

using Charge = boost::rational<long long>;

struct Element {
  enum Kind { vertex, face } kind = vertex;
  int id = 0;

  std::string str() const { return (kind == vertex ? "v" : "f") + std::to_string(id); }
  friend bool operator==(const Element&, const Element&) = default;
};

struct Transfer {
  std::string rule;  // "R1", "R2a".."R2d", "R3", "R4", "R5"
  Element src, dst;
  Charge amount;
};

struct ChargeLedger {
  std::vector<Charge> vertex_initial, face_initial;
  std::vector<Transfer> transfers;
  std::vector<Charge> vertex_final, face_final;
  std::vector<std::string> gaps;   // situations no rule covers
  std::vector<std::string> notes;

  Charge initial_total() const {
    Charge t = 0;
    for (auto c : vertex_initial) t += c;
    for (auto c : face_initial) t += c;
    return t;
  }
  Charge final_total() const {
    Charge t = 0;
    for (auto c : vertex_final) t += c;
    for (auto c : face_final) t += c;
    return t;
  }
  std::vector<Element> negative() const {
    std::vector<Element> out;
    for (std::size_t v = 0; v < vertex_final.size(); ++v)
      if (vertex_final[v] < 0) out.push_back({Element::vertex, static_cast<int>(v)});
    for (std::size_t f = 0; f < face_final.size(); ++f)
      if (face_final[f] < 0) out.push_back({Element::face, static_cast<int>(f)});
    return out;
  }
};

inline std::string to_string(const Charge& c) {
  return c.denominator() == 1 ? std::to_string(c.numerator())
                              : std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

/// ch(v) = 2d(v) - 6 and ch(face) = length - 6; final charges start equal to
/// the initial ones.
inline ChargeLedger initial_charges(const EmbeddedGraph& g) {
  if (!g.is_connected())
    throw PreconditionError("charges need a connected graph (" + std::to_string(g.component_count()) + " components)");
  ChargeLedger L;
  for (int v = 0; v < g.vertex_count(); ++v) L.vertex_initial.push_back(Charge(2 * g.degree(v) - 6));
  for (const auto& f : g.faces()) L.face_initial.push_back(Charge(f.length() - 6));
  L.vertex_final = L.vertex_initial;
  L.face_final = L.face_initial;
  return L;
}

inline ChargeLedger apply_rules(const EmbeddedGraph& g, ChargeLedger L) {
  if (L.vertex_initial.size() != static_cast<std::size_t>(g.vertex_count()) ||
      L.face_initial.size() != static_cast<std::size_t>(g.face_count()))
    throw PreconditionError("ledger does not match the graph");
  L.vertex_final = L.vertex_initial;
  L.face_final = L.face_initial;
  L.transfers.clear();
  L.gaps.clear();
  L.notes.clear();

  auto len = [&](int f) { return g.faces()[static_cast<std::size_t>(f)].length(); };
  std::vector<int> n2(static_cast<std::size_t>(g.face_count()));
  for (int f = 0; f < g.face_count(); ++f) n2[static_cast<std::size_t>(f)] = detail::count_two_vertices(g, f);

  auto send = [&](std::string rule, Element src, Element dst, Charge amount) {
    auto& from = src.kind == Element::vertex ? L.vertex_final[static_cast<std::size_t>(src.id)]
                                             : L.face_final[static_cast<std::size_t>(src.id)];
    from -= amount;
    auto& to = dst.kind == Element::vertex ? L.vertex_final[static_cast<std::size_t>(dst.id)]
                                           : L.face_final[static_cast<std::size_t>(dst.id)];
    to += amount;
    L.transfers.push_back({std::move(rule), src, dst, amount});
  };
  auto V = [](int v) { return Element{Element::vertex, v}; };
  auto F = [](int f) { return Element{Element::face, f}; };

  // R1
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 4) continue;
    for (int f : detail::faces_at(g, v))
      if (len(f) == 5) send("R1", V(v), F(f), Charge(1, 5));
  }

  // R2
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 4) continue;
    for (int u : g.neighbors(v)) {
      if (g.degree(u) != 2) continue;
      const std::string pair = "R2 (" + V(v).str() + ", " + V(u).str() + ")";
      auto fs = detail::faces_at(g, u);
      if (fs.size() != 2) {
        L.gaps.push_back(pair + ": 2-vertex lies on a single face");
        continue;
      }
      std::sort(fs.begin(), fs.end(), [&](int a, int b) {
        return std::make_tuple(len(a), -n2[static_cast<std::size_t>(a)], a) <
               std::make_tuple(len(b), -n2[static_cast<std::size_t>(b)], b);
      });
      const int a1 = fs[0], a2 = fs[1];
      const int l1 = len(a1), l2 = len(a2);
      const int m1 = n2[static_cast<std::size_t>(a1)], m2 = n2[static_cast<std::size_t>(a2)];
      if (l1 == 6) {
        send("R2a", V(v), F(a1), Charge(2, 3));
      } else if (l1 == 7 && l2 == 7 && m1 == 2 && m2 == 2) {
        send("R2b", V(v), F(a1), Charge(1, 3));
        send("R2b", V(v), F(a2), Charge(1, 3));
      } else if (l1 == 7 && l2 == 7 && m1 >= 2 && m2 == 1) {
        send("R2c", V(v), F(a1), Charge(2, 3));
      } else if (l1 == 7 && l2 >= 8) {
        send("R2d", V(v), F(a1), Charge(2, 3));
      } else if (l1 <= 7) {
        L.gaps.push_back(pair + ": faces of lengths " + std::to_string(l1) + "," + std::to_string(l2) +
                         " with n2 " + std::to_string(m1) + "," + std::to_string(m2));
      }
    }
  }

  // R3, R4, R5
  bool long_thread = false;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != 2) continue;
    auto nb = g.neighbors(u);
    if (!nb.empty() && std::all_of(nb.begin(), nb.end(), [&](int w) { return g.degree(w) == 2; })) long_thread = true;
    const bool thread = in_two_thread(g, u);
    for (int f : detail::faces_at(g, u)) {
      if (!thread) {
        send("R3", F(f), V(u), Charge(1));
      } else if (len(f) == 7) {
        send("R4", F(f), V(u), Charge(5, 6));
      } else if (len(f) >= 8) {
        send("R5", F(f), V(u), Charge(7, 6));
      } else {
        L.gaps.push_back("thread vertex " + V(u).str() + " on face " + F(f).str() + " of length " +
                         std::to_string(len(f)));
      }
    }
  }
  if (long_thread) L.notes.push_back("graph has a thread of three or more 2-vertices");
  return L;
}

enum class AuditVerdict {
  structure_violated,       // some lemma conclusion fails, so G is no minimal counterexample
  counterexample_impossible,  // all conclusions hold and no charge is negative, contradicting -12
  consistent_counterexample,  // all conclusions hold yet a charge stays negative
};

inline const char* to_string(AuditVerdict v) {
  switch (v) {
    case AuditVerdict::structure_violated: return "structure_violated";
    case AuditVerdict::counterexample_impossible: return "counterexample_impossible";
    case AuditVerdict::consistent_counterexample: return "consistent_counterexample";
  }
  return "?";
}

struct AuditReport {
  ChargeLedger ledger;
  StructureReport structure;
  Charge total_before, total_after;
  std::vector<Element> negative;
  AuditVerdict verdict = AuditVerdict::structure_violated;

  bool conserved() const { return total_before == total_after && total_after == Charge(-12); }
};

inline AuditReport audit(const EmbeddedGraph& g) {
  AuditReport r;
  r.ledger = apply_rules(g, initial_charges(g));
  r.structure = structure_report(g);
  r.total_before = r.ledger.initial_total();
  r.total_after = r.ledger.final_total();
  r.negative = r.ledger.negative();
  if (!r.structure.all_hold()) r.verdict = AuditVerdict::structure_violated;
  else if (r.negative.empty()) r.verdict = AuditVerdict::counterexample_impossible;
  else r.verdict = AuditVerdict::consistent_counterexample;
  return r;
}

inline nlohmann::json charge_json(const Charge& c) { return {{"num", c.numerator()}, {"den", c.denominator()}}; }

inline nlohmann::json to_json(const StructureReport& s) {
  auto arr = nlohmann::json::array();
  for (const auto& p : s.predicates) {
    nlohmann::json j{{"key", p.key}, {"statement", p.statement}, {"holds", p.holds}};
    if (!p.holds) j["witness"] = p.witness;
    arr.push_back(j);
  }
  return arr;
}

inline nlohmann::json to_json(const AuditReport& r) {
  auto charges = [](const std::vector<Charge>& cs) {
    auto a = nlohmann::json::array();
    for (auto c : cs) a.push_back(charge_json(c));
    return a;
  };
  nlohmann::json j;
  j["initial"] = {{"vertices", charges(r.ledger.vertex_initial)}, {"faces", charges(r.ledger.face_initial)}};
  j["transfers"] = nlohmann::json::array();
  for (const auto& t : r.ledger.transfers)
    j["transfers"].push_back({{"rule", t.rule},
                              {"src", t.src.str()},
                              {"dst", t.dst.str()},
                              {"num", t.amount.numerator()},
                              {"den", t.amount.denominator()}});
  j["final"] = {{"vertices", charges(r.ledger.vertex_final)}, {"faces", charges(r.ledger.face_final)}};
  j["total"] = charge_json(r.total_after);
  j["gaps"] = r.ledger.gaps;
  j["notes"] = r.ledger.notes;
  auto neg = nlohmann::json::array();
  for (const auto& e : r.negative) neg.push_back(e.str());
  j["negative"] = neg;
  j["structure"] = to_json(r.structure);
  j["verdict"] = to_string(r.verdict);
  return j;
}

}  // namespace facet
