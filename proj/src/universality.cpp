#include "semiwork/universality.hpp"

#include <string>

#include "semiwork/closure.hpp"

namespace semiwork {

  namespace {
    void check_degree(std::size_t n, bool allow_large) {
      if (n == 0) {
        throw ArgError("degree must be positive");
      }
      if (n > max_default_universality_degree && !allow_large) {
        throw ArgError("degree " + std::to_string(n)
                       + " exceeds 4; an explicit override is required");
      }
    }
  }  // namespace

  CayleyTable full_transformation_monoid(std::size_t n, bool allow_large_degree) {
    check_degree(n, allow_large_degree);
    ClosureOptions opts;
    opts.allow_large_degree = allow_large_degree;
    return closure(make_tn_generators(n), opts).table;
  }

  UniversalityVerdict is_universal(CayleyTable const&         model,
                                   std::size_t                n,
                                   UniversalityMode           mode,
                                   UniversalityOptions const& opts) {
    auto const tn = full_transformation_monoid(n, opts.allow_large_degree);
    UniversalityVerdict out{n, mode, Verdict::no, std::nullopt, std::nullopt, 0};
    if (mode == UniversalityMode::embed) {
      if (model.order() < tn.order()) {
        return out;
      }
      auto found = find_embeddings(tn, model, {1, opts.budget, opts.workers});
      out.verdict = found.verdict();
      out.nodes   = found.nodes;
      if (!found.found.empty()) {
        out.embedding = std::move(found.found.front());
      }
      return out;
    }
    auto div    = divides(tn, model, opts.budget, opts.workers);
    out.verdict = div.verdict;
    out.nodes   = div.nodes;
    out.division = std::move(div.witness);
    return out;
  }

  UniversalityVerdict is_computer(CayleyTable const&         model,
                                  std::size_t                n,
                                  UniversalityOptions const& opts) {
    return is_universal(model, n, UniversalityMode::divide, opts);
  }

  bool verify_universality(CayleyTable const& model, UniversalityVerdict const& v) {
    if (v.verdict != Verdict::yes) {
      return false;
    }
    auto const tn = full_transformation_monoid(v.n, true);
    if (v.mode == UniversalityMode::embed) {
      if (!v.embedding || !(v.embedding->source == tn) || !(v.embedding->target == model)) {
        return false;
      }
      return check_morphism(*v.embedding).is_embedding();
    }
    return v.division && verify_division(tn, model, *v.division);
  }

}  // namespace semiwork
