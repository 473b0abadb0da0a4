#include "lyu/cli/runner.hpp"

#include <map>

#include "lyu/cli/parse.hpp"

namespace lyu::cli {

void add_job_options(CLI::App& app, JobSpec& spec) {
  static const std::map<std::string, Invariant> invariants{{"depth", Invariant::Depth}, {"betti", Invariant::Betti},
                                                           {"table", Invariant::Table}, {"ccm", Invariant::Ccm},
                                                           {"covers", Invariant::Covers}, {"all", Invariant::All}};
  static const std::map<std::string, OutputFormat> formats{
      {"ascii", OutputFormat::Ascii}, {"json", OutputFormat::Json}, {"latex", OutputFormat::Latex}};
  app.add_option("--input", spec.input, "ideal text (\"x1*x2, x2*x3\"), graph file, or cycle:<n>");
  app.add_option("--vars", spec.vars, "number of variables (default: largest index)");
  app.add_option("--invariant", spec.invariant, "depth | betti | table | ccm | covers | all")
      ->transform(CLI::CheckedTransformer(invariants, CLI::ignore_case));
  app.add_option("--char", spec.characteristic, "field characteristic: 0 or a prime");
  app.add_option("--format", spec.format, "ascii | json | latex")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--unmixed", spec.unmixed, "replace the ideal by its unmixed part");
  app.add_option("--cache-dir", spec.cache_dir, "result cache directory (default: $LYU_CACHE_DIR)");
}

JobOutcome execute(const JobSpec& spec, const ResultCache* cache) {
  if (spec.input.empty()) throw ParseError(0, "--input", "no input given");
  const FieldSpec field =
      spec.characteristic == 0 ? FieldSpec::rationals() : FieldSpec::prime(spec.characteristic);
  const MonomialIdeal input = resolve_input(spec.input, spec.vars);
  require_squarefree_proper(input, "invariants");
  const std::string key = canonical_key(input, field, spec.invariant, spec.unmixed);
  if (cache) {
    if (auto hit = cache->load(key)) {
      JobResult r = std::move(*hit);
      // names are not part of the key; report the caller's own
      const auto target = spec.unmixed ? unmixed_part(input) : input;
      if (r.ideal.generators() == target.generators()) {
        r.ideal = target;
        return {std::move(r), true};
      }
    }
  }
  const MonomialIdeal ideal = spec.unmixed ? unmixed_part(input) : input;
  JobResult r{ideal, field, spec.unmixed, compute_invariants(ideal, field, spec.invariant)};
  if (cache) cache->store(key, r);
  return {std::move(r), false};
}

std::string render(const JobResult& result, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return to_json(result).dump(2) + "\n";
    case OutputFormat::Latex: return format_latex(result);
    case OutputFormat::Ascii: break;
  }
  return format_ascii(result);
}

std::pair<int, std::string> classify(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const ParseError& x) {
    return {kExitUsage, x.what()};
  } catch (const DomainError& x) {
    return {kExitDomain, x.what()};
  } catch (const ResourceError& x) {
    return {kExitResource, x.what()};
  } catch (const std::bad_alloc&) {
    return {kExitResource, "out of memory"};
  } catch (const std::filesystem::filesystem_error& x) {
    return {kExitResource, x.what()};
  } catch (const std::exception& x) {
    return {kExitDomain, x.what()};
  }
}

RunReport run(const JobSpec& spec) {
  RunReport report;
  try {
    std::optional<ResultCache> cache;
    if (auto dir = spec.cache_dir ? spec.cache_dir : ResultCache::default_dir()) cache.emplace(*dir);
    auto outcome = execute(spec, cache ? &*cache : nullptr);
    report.cache_hit = outcome.cache_hit;
    report.output = render(outcome.result, spec.format);
  } catch (...) {
    std::tie(report.exit_code, report.error) = classify(std::current_exception());
  }
  return report;
}

}  // namespace lyu::cli
