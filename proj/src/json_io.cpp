#include "critset/json_io.hpp"

namespace critset {

json matrix_json(const PartialMatrix& m) {
  json t = json::array();
  for (const Triple& cell : m.triples()) t.push_back({cell.row, cell.col, cell.value});
  return json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"rowSums", m.margins().row_sums},
              {"colSums", m.margins().col_sums},
              {"triples", std::move(t)}};
}

PartialMatrix matrix_from_json(const json& j) {
  Margins margins{j.at("rowSums").get<std::vector<int>>(),
                  j.at("colSums").get<std::vector<int>>()};
  PartialMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>(), std::move(margins));
  for (const auto& t : j.at("triples")) {
    if (!t.is_array() || t.size() != 3) throw ParseError("bad triple in matrix JSON");
    int v = t[2].get<int>();
    if (v != 0 && v != 1) throw ParseError("triple value must be 0 or 1");
    m.set(t[0].get<int>(), t[1].get<int>(), entry_of(v));
  }
  return m;
}

json triples_json(const std::vector<Triple>& ts) {
  json out = json::array();
  for (const Triple& t : ts) out.push_back({t.row, t.col, t.value});
  return out;
}

json walk_json(const Walk& w) { return json{{"depth", w.depths()}}; }

Walk walk_from_json(const json& j, int rows) {
  return Walk(rows, j.at("depth").get<std::vector<int>>());
}

json certificate_json(const WalkCertificate& c) {
  return json{{"rowPerm", c.row_perm}, {"colPerm", c.col_perm}, {"walk", walk_json(c.walk)}};
}

WalkCertificate certificate_from_json(const json& j) {
  Perm rp = j.at("rowPerm").get<Perm>();
  Perm cp = j.at("colPerm").get<Perm>();
  Walk w = walk_from_json(j.at("walk"), static_cast<int>(rp.size()));
  return WalkCertificate{std::move(rp), std::move(cp), std::move(w)};
}

json cycle_json(const Cycle& c) { return triples_json(c.circuit); }

json trade_json(const Trade& t) { return triples_json(t.body.triples()); }

json certified_set_json(const CertifiedCriticalSet& c) {
  json out{{"matrix", matrix_json(c.matrix)},
           {"cells", triples_json(c.cells.triples())},
           {"size", c.cells.size()}};
  if (c.certificate) out["certificate"] = certificate_json(*c.certificate);
  if (!c.per_cell_cycles.empty()) {
    json cycles = json::array();
    for (const auto& [cell, cycle] : c.per_cell_cycles)
      cycles.push_back({{"cell", {cell.row, cell.col}}, {"cycle", cycle_json(cycle)}});
    out["perCellCycles"] = std::move(cycles);
  }
  return out;
}

static json witness_json(const StatWitness& w) {
  return json{{"matrix", matrix_json(w.matrix)},
              {"set", triples_json(w.set.triples())},
              {"size", w.size}};
}

json report_json(const ExtremalReport& r) {
  return json{{"class", r.spec.label()},
              {"scs", r.scs},
              {"lcs", r.lcs},
              {"inf", r.inf},
              {"sup", r.sup},
              {"matricesExamined", r.matrices_examined},
              {"witnesses",
               {{"scs", witness_json(r.scs_witness)},
                {"lcs", witness_json(r.lcs_witness)},
                {"inf", witness_json(r.inf_witness)},
                {"sup", witness_json(r.sup_witness)}}}};
}

json spot_report_json(const SpotReport& r) {
  return json{{"class", r.spec.label()},
              {"mode", "scs-spot-check"},
              {"sample", r.sample},
              {"seed", r.seed},
              {"minScs", r.min_scs},
              {"maxScs", r.max_scs},
              {"witnesses",
               {{"min", witness_json(r.min_witness)}, {"max", witness_json(r.max_witness)}}}};
}

}  // namespace critset
