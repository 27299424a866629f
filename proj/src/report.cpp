#include "cartier/report.hpp"

#include <sstream>

#include "json.hpp"

#include "cartier/error.hpp"

namespace cartier {

using nlohmann::json;

void to_json(json& j, const CurveSpec& s) {
  j = json{{"p", s.p}, {"e", s.e}, {"modulus", s.modulus}, {"genus", s.genus}, {"f", s.f}};
}
void from_json(const json& j, CurveSpec& s) {
  j.at("p").get_to(s.p);
  j.at("e").get_to(s.e);
  j.at("modulus").get_to(s.modulus);
  j.at("genus").get_to(s.genus);
  j.at("f").get_to(s.f);
}

void to_json(json& j, const MatrixSection& m) {
  j = json{{"name", m.name}, {"semantics", m.semantics}, {"rows", m.rows}};
}
void from_json(const json& j, MatrixSection& m) {
  j.at("name").get_to(m.name);
  j.at("semantics").get_to(m.semantics);
  j.at("rows").get_to(m.rows);
}

void to_json(json& j, const InvariantSection& s) {
  j = json{{"p_rank", s.p_rank},
           {"a_number", s.a_number},
           {"is_superspecial", s.superspecial},
           {"l_mod_p", s.l_mod_p},
           {"l_mod_p_text", s.l_mod_p_text},
           {"chi_mod_p", s.chi_mod_p},
           {"chi_mod_p_text", s.chi_mod_p_text}};
}
void from_json(const json& j, InvariantSection& s) {
  j.at("p_rank").get_to(s.p_rank);
  j.at("a_number").get_to(s.a_number);
  j.at("is_superspecial").get_to(s.superspecial);
  j.at("l_mod_p").get_to(s.l_mod_p);
  j.at("l_mod_p_text").get_to(s.l_mod_p_text);
  j.at("chi_mod_p").get_to(s.chi_mod_p);
  j.at("chi_mod_p_text").get_to(s.chi_mod_p_text);
}

void to_json(json& j, const OracleSection& s) {
  j = json{{"bound", s.bound},
           {"seed", s.seed},
           {"counts", s.counts},
           {"exact_l", s.exact_l},
           {"exact_l_text", s.exact_l_text},
           {"p_rank_oracle", s.p_rank_oracle},
           {"l_agrees", s.l_agrees},
           {"p_rank_agrees", s.p_rank_agrees},
           {"isomorphism_invariant", s.isomorphism_invariant}};
}
void from_json(const json& j, OracleSection& s) {
  j.at("bound").get_to(s.bound);
  j.at("seed").get_to(s.seed);
  j.at("counts").get_to(s.counts);
  j.at("exact_l").get_to(s.exact_l);
  j.at("exact_l_text").get_to(s.exact_l_text);
  j.at("p_rank_oracle").get_to(s.p_rank_oracle);
  j.at("l_agrees").get_to(s.l_agrees);
  j.at("p_rank_agrees").get_to(s.p_rank_agrees);
  j.at("isomorphism_invariant").get_to(s.isomorphism_invariant);
}

void to_json(json& j, const PitfallSection& s) {
  j = json{{"naive_product", s.naive_product},
           {"naive_char_poly", s.naive_char_poly},
           {"naive_char_poly_text", s.naive_char_poly_text},
           {"correct_char_poly", s.correct_char_poly},
           {"correct_char_poly_text", s.correct_char_poly_text},
           {"chi_mod_p_text", s.chi_mod_p_text},
           {"verdict", s.differ ? "DIFFER" : "AGREE"},
           {"note", s.note}};
}
void from_json(const json& j, PitfallSection& s) {
  j.at("naive_product").get_to(s.naive_product);
  j.at("naive_char_poly").get_to(s.naive_char_poly);
  j.at("naive_char_poly_text").get_to(s.naive_char_poly_text);
  j.at("correct_char_poly").get_to(s.correct_char_poly);
  j.at("correct_char_poly_text").get_to(s.correct_char_poly_text);
  j.at("chi_mod_p_text").get_to(s.chi_mod_p_text);
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "DIFFER" && verdict != "AGREE") throw ParseError("bad verdict '" + verdict + "'");
  s.differ = verdict == "DIFFER";
  j.at("note").get_to(s.note);
}

std::string emit_machine(const Report& r) {
  json j{{"command", r.command}, {"curve", r.curve}, {"matrices", r.matrices}};
  if (r.invariants) j["invariants"] = *r.invariants;
  if (r.oracle) j["oracle"] = *r.oracle;
  if (r.pitfall) j["pitfall"] = *r.pitfall;
  return j.dump(2) + "\n";
}

Report parse_machine(const std::string& text) {
  try {
    const json j = json::parse(text);
    Report r;
    j.at("command").get_to(r.command);
    j.at("curve").get_to(r.curve);
    j.at("matrices").get_to(r.matrices);
    if (j.contains("invariants")) r.invariants = j.at("invariants").get<InvariantSection>();
    if (j.contains("oracle")) r.oracle = j.at("oracle").get<OracleSection>();
    if (j.contains("pitfall")) r.pitfall = j.at("pitfall").get<PitfallSection>();
    return r;
  } catch (const json::exception& err) {
    throw ParseError(std::string("malformed report: ") + err.what());
  }
}

namespace {

void write_matrix(std::ostream& out, const MatrixSection& m) {
  out << m.name << "  (" << m.semantics << ")\n";
  for (const auto& row : m.rows) {
    out << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << row[j];
    out << "]\n";
  }
}

}  // namespace

std::string emit_text(const Report& r) {
  std::ostringstream out;
  const auto& c = r.curve;
  out << "curve: y^2 = f(x) over F_" << c.p;
  if (c.e > 1) out << "^" << c.e;
  out << ", genus " << c.genus << "\n";
  if (c.e > 1) {
    out << "modulus:";
    for (auto m : c.modulus) out << ' ' << m;
    out << "  (low-to-high)\n";
  }
  out << "f:";
  for (const auto& x : c.f) out << ' ' << x;
  out << "  (low-to-high)\n";
  out << "matrices act on the left of column vectors\n\n";

  for (const auto& m : r.matrices) write_matrix(out, m);

  if (r.invariants) {
    const auto& s = *r.invariants;
    out << "\np-rank:         " << s.p_rank << "\n";
    out << "a-number:       " << s.a_number << "\n";
    out << "superspecial:   " << (s.superspecial ? "yes" : "no") << "\n";
    out << "L(T) mod p:     " << s.l_mod_p_text << "\n";
    out << "chi(T) mod p:   " << s.chi_mod_p_text << "\n";
  }
  if (r.oracle) {
    const auto& o = *r.oracle;
    out << "\noracle (enumeration bound " << o.bound << ", seed " << o.seed << ")\n";
    out << "  point counts:";
    for (std::size_t k = 0; k < o.counts.size(); ++k) out << " N_" << k + 1 << "=" << o.counts[k];
    out << "\n";
    out << "  exact L(T):    " << o.exact_l_text << "\n";
    out << "  p-rank:        " << o.p_rank_oracle << "\n";
    out << "  L mod p agrees:       " << (o.l_agrees ? "yes" : "NO") << "\n";
    out << "  p-rank agrees:        " << (o.p_rank_agrees ? "yes" : "NO") << "\n";
    out << "  isomorphism check:    " << (o.isomorphism_invariant ? "yes" : "NO") << "\n";
  }
  if (r.pitfall) {
    const auto& s = *r.pitfall;
    out << "\n";
    write_matrix(out, s.naive_product);
    out << "naive char poly:     " << s.naive_char_poly_text << "\n";
    out << "correct char poly:   " << s.correct_char_poly_text << "\n";
    out << "correct chi mod p:   " << s.chi_mod_p_text << "\n";
    out << "verdict: " << (s.differ ? "DIFFER" : "AGREE") << "\n";
    if (!s.note.empty()) out << s.note << "\n";
  }
  return out.str();
}

}  // namespace cartier
