#include "lyu/resolution/quotient.hpp"

namespace lyu {

ResolutionSummary resolve_quotient(const MonomialIdeal& ideal, const FieldSpec& spec) {
  if (ideal.is_zero()) throw DomainError("resolve_quotient: zero ideal");
  return with_field(spec, [&](const auto& field) {
    auto res = minimal_free_resolution(field, quotient_presentation(field, ideal), ideal.nvars() + 1);
    verify_d_squared(field, res);
    return summarize(res);
  });
}

BettiTable taylor_betti(const MonomialIdeal& ideal, const FieldSpec& spec) {
  return with_field(spec, [&](const auto& field) {
    auto minimal = minimalize_complex(field, taylor_complex(field, ideal));
    verify_d_squared(field, minimal);
    return graded_betti(minimal);
  });
}

int depth_ab(const MonomialIdeal& ideal, const FieldSpec& spec) { return resolve_quotient(ideal, spec).depth; }

}  // namespace lyu
