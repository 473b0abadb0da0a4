#pragma once

#include <map>
#include <string>
#include <vector>

#include "lyu/algebra/field.hpp"
#include "lyu/ideal/ideal.hpp"
#include "lyu/resolution/betti.hpp"
#include "lyu/resolution/degree.hpp"

namespace lyu {

/// Named checks and values; every failed check carries a witness.
struct InvariantReport {
  struct Check {
    std::string name;
    bool passed = false;
    std::string witness;
  };
  std::vector<Check> checks;
  std::map<std::string, long> values;

  bool passed() const;
  void add(std::string name, bool ok, std::string witness = {});
};

/// Field-independent description of a module Ext^k(R/I, R).
struct ExtSummary {
  bool is_zero = true;
  std::size_t generators = 0;
  BettiTable betti;
  HilbertSeries hilbert;
  std::map<Degree, long> k_polynomial;  // multigraded Hilbert numerator
  int krull_dim = -1;
  int proj_dim = -1;
  int depth = -1;

  bool is_cohen_macaulay() const { return !is_zero && depth == krull_dim; }
};

ExtSummary ext_summary(const MonomialIdeal& ideal, std::size_t k, const FieldSpec& field = {});

/// Ext^{n-d}(R/I, R), d = dim R/I.
ExtSummary canonical_module_summary(const MonomialIdeal& ideal, const FieldSpec& field = {});

/// depth(M) = dim(M) for M = Ext^k(R/I, R); DomainError for the zero module.
bool is_cm_ext(const MonomialIdeal& ideal, std::size_t k, const FieldSpec& field = {});
bool is_canonically_cm(const MonomialIdeal& ideal, const FieldSpec& field = {});

/// For every i < dim R/I: does each variable act as zero on Ext^{n-i}(R/I, R)?
/// (equivalently, m annihilates H^i_m(R/I)).
InvariantReport quasi_buchsbaum_check(const MonomialIdeal& ideal, const FieldSpec& field = {});

/// dim_K Ext^{n-i}(R/I,R)_{sigma-1} vs dim_K H^i_m(R/I)_{-sigma} for every
/// i and squarefree sigma; returns the disagreements (empty when consistent).
std::vector<std::string> duality_shift_mismatches(const MonomialIdeal& ideal, const FieldSpec& field = {});

/// lambda_{i,j} for 0 <= i, j < entries.size(); only i <= j <= d is nonzero
/// for a correct computation, but every computed cell is kept so the vanishing
/// properties can be checked rather than assumed.
struct LyubeznikTable {
  int d = 0;
  FieldSpec field;
  std::vector<std::vector<long>> entries;

  long at(int i, int j) const;
  bool is_trivial() const;
  bool operator==(const LyubeznikTable&) const = default;
};

/// lambda_{i,j}(R/I) = dim_K [Ext^{n-i}(Ext^{n-j}(R/I,R), R)]_0.
long lyubeznik_number(const MonomialIdeal& ideal, int i, int j, const FieldSpec& field = {});

/// Table for 0 <= i, j <= d, or 0 <= i, j <= n with `full_extent`.
LyubeznikTable lyubeznik_table(const MonomialIdeal& ideal, const FieldSpec& field = {}, bool full_extent = false);

/// (i) vanishing for j > d, (ii) vanishing for i > j and lambda_{d,d} != 0,
/// (iii) sum (-1)^{i-j} lambda_{i,j} = 1.
InvariantReport validate_table(const LyubeznikTable& table);

/// Column j = d, rows 0..d.
std::vector<long> last_column(const LyubeznikTable& table);

/// Upper-triangular layout: row i shows columns j >= i.
std::string format_table_ascii(const LyubeznikTable& table);
std::string format_table_latex(const LyubeznikTable& table);

}  // namespace lyu
