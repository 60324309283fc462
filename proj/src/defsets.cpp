#include "critset/defsets.hpp"

#include <algorithm>

namespace critset {

bool is_defining(const PartialMatrix& m, const PartialMatrix& d, const SearchOptions& opts) {
  if (!subset_of(d, m)) throw std::invalid_argument("is_defining: d not a subset of m");
  if (!is_complete(m)) throw std::invalid_argument("is_defining: m must be complete");
  return count_completions(d, CompletionBudget::up_to(2), opts) == 1;
}

bool is_critical(const PartialMatrix& m, const PartialMatrix& d, const SearchOptions& opts) {
  if (!is_defining(m, d, opts)) return false;
  for (const Cell& cell : row_major_cells(d)) {
    PartialMatrix smaller = d;
    smaller.set(cell.row, cell.col, Entry::Empty);
    if (count_completions(smaller, CompletionBudget::up_to(2), opts) < 2) return false;
  }
  return true;
}

std::vector<Cell> row_major_cells(const PartialMatrix& d) {
  std::vector<Cell> out;
  out.reserve(d.size());
  for (const Triple& t : d.triples()) out.push_back({t.row, t.col});
  return out;
}

CertifiedCriticalSet minimize_to_critical(const PartialMatrix& m, const PartialMatrix& d,
                                          const std::vector<Cell>& removal_order,
                                          const SearchOptions& opts) {
  if (!is_defining(m, d, opts))
    throw std::invalid_argument("minimize_to_critical: d is not a defining set");
  PartialMatrix current = d;
  for (const Cell& cell : removal_order) {
    if (!current.filled(cell.row, cell.col)) continue;
    PartialMatrix smaller = current;
    smaller.set(cell.row, cell.col, Entry::Empty);
    if (count_completions(smaller, CompletionBudget::up_to(2), opts) == 1)
      current = std::move(smaller);
  }
  return CertifiedCriticalSet{m, std::move(current), std::nullopt, {}};
}

bool reverify(const CertifiedCriticalSet& c) {
  if (!is_complete(c.matrix) || !subset_of(c.cells, c.matrix)) return false;
  if (c.certificate) {
    if (!verify_block_conditions(c.matrix, *c.certificate)) return false;
    if (!(induced_defining_set(c.matrix, *c.certificate) == c.cells)) return false;
  }
  for (const auto& [cell, cycle] : c.per_cell_cycles) {
    if (!valid_cycle(cycle)) return false;
    int hits = 0;
    for (const Triple& t : cycle.circuit) {
      if (c.matrix.at(t.row, t.col) != entry_of(t.value)) return false;
      if (c.cells.filled(t.row, t.col)) {
        ++hits;
        if (t.row != cell.row || t.col != cell.col) return false;
      }
    }
    if (hits != 1) return false;
  }
  return true;
}

void attach_cell_cycles(CertifiedCriticalSet& c) {
  for (const Cell& cell : row_major_cells(c.cells)) {
    auto cycle = find_cycle_through(c.matrix, c.cells, cell);
    if (!cycle)
      throw std::runtime_error("attach_cell_cycles: no cycle through (" +
                               std::to_string(cell.row) + "," + std::to_string(cell.col) + ")");
    c.per_cell_cycles[cell] = std::move(*cycle);
  }
}

bool cycles_certify(const CertifiedCriticalSet& c) {
  for (const Cell& cell : row_major_cells(c.cells))
    if (!c.per_cell_cycles.count(cell)) return false;
  return reverify(c);
}

PartialMatrix complement_defining(const PartialMatrix& m, const CertifiedCriticalSet& c) {
  if (!c.certificate)
    throw std::invalid_argument("complement_defining: missing walk certificate");
  const WalkCertificate& cert = *c.certificate;
  PartialMatrix p = permute(m, cert.row_perm, cert.col_perm);

  PartialMatrix d_permuted(p.rows(), p.cols(), p.margins());
  if (cert.walk.starts_east()) {
    Walk cw = complement_walk(block_structure(cert.walk));
    d_permuted = induced_defining_set(p, identity_perm(p.rows()), identity_perm(p.cols()), cw,
                                      /*flipped=*/true);
  } else {
    // normalize, build there, map back
    PartialMatrix q = complement(transpose(p));
    Walk cw = complement_walk(block_structure(transpose_walk(cert.walk)));
    PartialMatrix dq = induced_defining_set(q, identity_perm(q.rows()), identity_perm(q.cols()),
                                            cw, /*flipped=*/true);
    d_permuted = complement(transpose(dq));
  }
  return permute(d_permuted, inverse_perm(cert.row_perm), inverse_perm(cert.col_perm));
}

}  // namespace critset
