#include "scf/gf2.hpp"

namespace scf {

void Gf2System::add_equation(const std::vector<int> &vars, int rhs) {
  std::vector<int> row(num_vars_, 0);
  for (int v : vars)
    row[v] ^= 1;
  rows_.push_back(std::move(row));
  rhs_.push_back(rhs & 1);
}

bool Gf2System::eliminate(std::vector<std::vector<int>> &rows,
                          std::vector<int> &rhs) const {
  std::size_t rank = 0;
  for (int col = 0; col < num_vars_ && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][col])
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[rank], rows[pivot]);
    std::swap(rhs[rank], rhs[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col]) {
        for (int c = 0; c < num_vars_; ++c)
          rows[r][c] ^= rows[rank][c];
        rhs[r] ^= rhs[rank];
      }
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rhs[r])
      return false;
  rows.resize(rank);
  rhs.resize(rank);
  return true;
}

std::optional<std::vector<int>> Gf2System::solve() const {
  auto rows = rows_;
  auto rhs = rhs_;
  if (!eliminate(rows, rhs))
    return std::nullopt;
  std::vector<int> x(num_vars_, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int lead = -1;
    for (int c = 0; c < num_vars_; ++c)
      if (rows[r][c]) {
        lead = c;
        break;
      }
    if (lead >= 0)
      x[lead] = rhs[r]; // free variables stay zero
  }
  return x;
}

std::optional<std::vector<int>> Gf2System::solve_lex_min() const {
  // Greedily pin each variable to 0 when the system stays consistent.
  Gf2System work = *this;
  std::vector<int> fixed(num_vars_, -1);
  for (int v = 0; v < num_vars_; ++v) {
    for (int bitval : {0, 1}) {
      Gf2System trial = work;
      trial.add_equation({v}, bitval);
      auto rows = trial.rows_;
      auto rhs = trial.rhs_;
      if (trial.eliminate(rows, rhs)) {
        work = std::move(trial);
        fixed[v] = bitval;
        break;
      }
    }
    if (fixed[v] < 0)
      return std::nullopt;
  }
  return fixed;
}

} // namespace scf
