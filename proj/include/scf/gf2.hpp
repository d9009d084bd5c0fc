#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace scf {

/// Dense GF(2) linear system A x = b; rows are bit vectors over
/// `num_vars` unknowns.
class Gf2System {
public:
  explicit Gf2System(int num_vars) : num_vars_(num_vars) {}

  void add_equation(const std::vector<int> &vars, int rhs);

  int num_vars() const { return num_vars_; }

  // Any solution with free variables set to zero; nullopt if
  // inconsistent.
  std::optional<std::vector<int>> solve() const;

  // The lexicographically smallest solution, treating variable 0 as the
  // most significant position.
  std::optional<std::vector<int>> solve_lex_min() const;

private:
  bool eliminate(std::vector<std::vector<int>> &rows,
                 std::vector<int> &rhs) const;

  int num_vars_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> rhs_;
};

} // namespace scf
