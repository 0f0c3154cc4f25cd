// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups

#include "owlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <new>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "owlab/boundary.hpp"
#include "owlab/dynamics.hpp"
#include "owlab/errors.hpp"
#include "owlab/filling.hpp"
#include "owlab/folner.hpp"
#include "owlab/io.hpp"
#include "owlab/parallel.hpp"
#include "owlab/subadditive.hpp"

namespace owlab::cli {

  using json = io::json;

  namespace {

    struct ParamSpec {
      ParamSpec(std::string n, bool req = false, bool rep = false, std::string fb = {})
          : name(std::move(n)), required(req), repeatable(rep), fallback(std::move(fb)) {}

      std::string name;
      bool        required;
      bool        repeatable;
      std::string fallback;  // default value, empty for none
    };

    struct CommandSpec {
      std::string            name;
      std::string            default_format;
      bool                   csv_allowed;
      bool                   needs_semigroup;
      std::vector<ParamSpec> params;
    };

    std::vector<CommandSpec> const& command_specs() {
      static std::vector<CommandSpec> const specs = {
          {"boundary", "json", false, true, {{"set", true}, {"K", true}}},
          {"alpha", "json", false, true, {{"set", true}, {"K", true}}},
          {"folner-report",
           "csv",
           true,
           true,
           {{"kind", false, false, "boxes"}, {"K", true}, {"indices", true}}},
          {"fill", "json", false, true, {{"omega", true}, {"K", true}, {"eps", true}}},
          {"tile",
           "json",
           false,
           true,
           {{"mode", false, false, "best-effort"},
            {"D", true},
            {"K", true, true},
            {"eps", true},
            {"n", false}}},
          {"ow",
           "csv",
           true,
           true,
           {{"folner", false, false, "boxes"},
            {"h", true},
            {"max", true},
            {"window", false, false, "5"},
            {"singleton-bound", false}}},
          {"entropy",
           "csv",
           true,
           false,
           {{"sft", true},
            {"folner", false, false, "boxes"},
            {"max", true},
            {"window", false, false, "5"}}},
          {"certify",
           "json",
           false,
           true,
           {{"D", true},
            {"K", true, true},
            {"eps", true},
            {"h", true},
            {"lambda", false},
            {"folner", false, false, "boxes"},
            {"max", false, false, "30"},
            {"window", false, false, "5"},
            {"singleton-bound", false}}},
      };
      return specs;
    }

    CommandSpec const& spec_of(std::string const& command) {
      for (auto const& s : command_specs()) {
        if (s.name == command) {
          return s;
        }
      }
      std::string known;
      for (auto const& s : command_specs()) {
        known += (known.empty() ? "" : ", ") + s.name;
      }
      throw ConfigError("command: unknown command '" + command + "' (expected one of " + known + ")");
    }

    //! Runs \p fn, prefixing configuration errors with the field name.
    template <typename Fn>
    auto in_field(std::string const& field, Fn&& fn) -> decltype(fn()) {
      try {
        return fn();
      } catch (ConfigError const& e) {
        throw ConfigError(field + ": " + e.what());
      }
    }

    class Params {
     public:
      explicit Params(JobConfig const& c) : _c(c) {}

      [[nodiscard]] bool has(std::string const& name) const {
        return _c.params.count(name) != 0;
      }
      [[nodiscard]] std::string const& one(std::string const& name) const {
        return _c.params.at(name).front();
      }
      [[nodiscard]] std::vector<std::string> const& all(std::string const& name) const {
        return _c.params.at(name);
      }

      [[nodiscard]] std::size_t count(std::string const& name) const {
        return in_field("--" + name, [&] {
          std::string const& text = one(name);
          if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
            throw ConfigError("expected a non-negative integer, got '" + text + "'");
          }
          return static_cast<std::size_t>(std::stoull(text));
        });
      }
      [[nodiscard]] Rational rational(std::string const& name) const {
        return in_field("--" + name, [&] { return io::parse_rational(one(name)); });
      }
      [[nodiscard]] FinSubset set(std::string const& name, Semigroup const& sg) const {
        return in_field("--" + name, [&] { return io::parse_set(one(name), sg); });
      }
      [[nodiscard]] std::vector<FinSubset> sets(std::string const& name,
                                                Semigroup const&   sg) const {
        std::vector<FinSubset> out;
        for (auto const& text : all(name)) {
          out.push_back(in_field("--" + name, [&] { return io::parse_set(text, sg); }));
        }
        return out;
      }

     private:
      JobConfig const& _c;
    };

    ////////////////////////////////////////////////////////////////////////
    // Output helpers
    ////////////////////////////////////////////////////////////////////////

    struct Sink {
      JobConfig const& config;
      std::ostream&    out;
      std::ostream&    err;

      void write(std::string const& body) const {
        if (config.output.empty()) {
          out << body;
          return;
        }
        std::ofstream file(config.output, std::ios::binary);
        if (!file) {
          throw ConfigError("output: cannot write '" + config.output + "'");
        }
        file << body;
      }

      //! Secondary JSON next to a CSV table: <output>.summary.json, or a
      //! single line on the diagnostic stream when writing to stdout.
      void summary(json const& j) const {
        if (config.output.empty()) {
          err << j.dump() << '\n';
          return;
        }
        std::ofstream file(config.output + ".summary.json", std::ios::binary);
        if (!file) {
          throw ConfigError("output: cannot write '" + config.output + ".summary.json'");
        }
        file << j.dump(2) << '\n';
      }

      void json_out(json const& j) const {
        write(j.dump() + "\n");
      }
    };

    Semigroup semigroup_of(JobConfig const& c) {
      if (c.semigroup.empty()) {
        throw ConfigError("semigroup: required for command '" + c.command + "'");
      }
      return in_field("semigroup", [&] { return io::parse_semigroup(c.semigroup); });
    }

    std::vector<std::size_t> parse_indices(std::string const& text) {
      return in_field("--indices", [&] {
        std::vector<std::size_t> out;
        std::stringstream        ss(text);
        std::string              part;
        while (std::getline(ss, part, ',')) {
          if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
            throw ConfigError("expected comma-separated positive integers, got '" + text + "'");
          }
          out.push_back(std::stoull(part));
        }
        if (out.empty()) {
          throw ConfigError("at least one index is required");
        }
        return out;
      });
    }

    json hypotheses_json(std::vector<HypothesisCheck> const& report) {
      json out = json::array();
      for (auto const& h : report) {
        out.push_back({{"label", h.label},
                       {"row", h.row},
                       {"column", h.column},
                       {"value", io::ratio_to_json(h.value)},
                       {"bound", io::rational_to_json(h.bound)},
                       {"holds", h.holds}});
      }
      return out;
    }

    json filling_json(FillingPattern const& p, Semigroup const& sg) {
      json witnesses = json::array();
      for (std::size_t i = 0; i < p.witnesses.members.size(); ++i) {
        witnesses.push_back({{"translate", io::element_to_json(p.pattern[i], sg)},
                             {"set", io::set_to_json(p.witnesses.members[i].set, sg)},
                             {"witness", io::set_to_json(p.witnesses.members[i].witness, sg)}});
      }
      return {{"pattern", io::set_to_json(p.pattern, sg)},
              {"tile", io::set_to_json(p.tile, sg)},
              {"coverage", io::set_to_json(p.coverage, sg)},
              {"witnesses", witnesses}};
    }

    json tiling_json(TilingResult const& t, Semigroup const& sg) {
      json patterns = json::array();
      for (std::size_t j = 0; j < t.patterns.size(); ++j) {
        json p          = filling_json(t.patterns[j], sg);
        p["tile_index"] = j + 1;
        patterns.push_back(std::move(p));
      }
      json transcript = json::array();
      for (auto const& step : t.transcript) {
        transcript.push_back({{"tile_index", step.tile_index},
                              {"remaining", io::set_to_json(step.remaining, sg)},
                              {"remaining_size", step.remaining.size()}});
      }
      return {{"mode", to_string(t.mode)},
              {"eps", io::rational_to_json(t.eps)},
              {"n", t.patterns.size()},
              {"n0", t.n0},
              {"domain_size", t.domain.size()},
              {"patterns", patterns},
              {"residual", io::set_to_json(t.residual, sg)},
              {"achieved", io::ratio_to_json(t.achieved)},
              {"residual_within_eps", t.residual_within_eps()},
              {"stopped_early", t.stopped_early},
              {"transcript", transcript},
              {"hypotheses", hypotheses_json(t.hypothesis_report)}};
    }

    SetFunction set_function_of(Params const& p, Semigroup const& sg) {
      SetFunction h = in_field("--h", [&] { return io::parse_set_function(p.one("h"), sg, default_budget()); });
      if (p.has("singleton-bound")) {
        h.singleton_bound = p.rational("singleton-bound").get_d();
      }
      return h;
    }

    FolnerSequence folner_of(Params const& p, std::string const& name, Semigroup const& sg) {
      return in_field("--" + name, [&] { return builtin_folner(sg, p.one(name)); });
    }

    void check_window(std::size_t max_index, std::size_t window) {
      if (window < 2) {
        throw ConfigError("--window: must be at least 2");
      }
      if (max_index < window) {
        throw ConfigError("--max: must be at least the window (" + std::to_string(window) + ")");
      }
    }

    std::string rows_csv(OWEstimate const& est) {
      std::string csv = "n,card,h,ratio\n";
      for (auto const& r : est.rows) {
        csv += std::to_string(r.index) + "," + std::to_string(r.cardinality) + ","
               + io::format_real(r.value) + "," + io::format_real(r.ratio) + "\n";
      }
      return csv;
    }

    json summary_json(OWEstimate const& est) {
      return {{"lambda_hat", io::real_to_json(est.lambda_hat)},
              {"cauchy_gap", io::real_to_json(est.cauchy_gap)},
              {"window", est.window},
              {"warnings", est.warnings}};
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    void cmd_boundary(JobConfig const& c, Sink const& sink, bool alpha_only) {
      Params const    p(c);
      Semigroup const sg = semigroup_of(c);
      FinSubset const A  = p.set("set", sg);
      FinSubset const K  = p.set("K", sg);
      json const      a  = io::ratio_to_json(alpha(sg, A, K));
      if (alpha_only) {
        sink.json_out({{"alpha", a}});
        return;
      }
      sink.json_out({{"interior", io::set_to_json(interior(sg, A, K), sg)},
                     {"boundary", io::set_to_json(boundary(sg, A, K), sg)},
                     {"alpha", a}});
    }

    void cmd_folner_report(JobConfig const& c, Sink const& sink) {
      Params const         p(c);
      Semigroup const      sg      = semigroup_of(c);
      FolnerSequence const seq     = folner_of(p, "kind", sg);
      FinSubset const      K       = p.set("K", sg);
      auto const           indices = parse_indices(p.one("indices"));
      if (std::find(indices.begin(), indices.end(), 0) != indices.end()) {
        throw ConfigError("--indices: indices start at 1");
      }
      auto const rows = folner_report(seq, K, indices, c.jobs);
      if (c.format == "json") {
        json out = json::array();
        for (auto const& r : rows) {
          out.push_back({{"n", r.index},
                         {"card", r.cardinality},
                         {"alpha", io::ratio_to_json(r.alpha)},
                         {"max_defect", io::ratio_to_json(r.max_defect)}});
        }
        sink.json_out(out);
        return;
      }
      std::string csv = "n,card,alpha_num,alpha_den,max_defect_num,max_defect_den\n";
      for (auto const& r : rows) {
        csv += std::to_string(r.index) + "," + std::to_string(r.cardinality) + ","
               + std::to_string(r.alpha.numerator) + "," + std::to_string(r.alpha.denominator) + ","
               + std::to_string(r.max_defect.numerator) + ","
               + std::to_string(r.max_defect.denominator) + "\n";
      }
      sink.write(csv);
    }

    void cmd_fill(JobConfig const& c, Sink const& sink) {
      Params const         p(c);
      Semigroup const      sg    = semigroup_of(c);
      FinSubset const      omega = p.set("omega", sg);
      FinSubset const      K     = p.set("K", sg);
      Rational const       eps   = p.rational("eps");
      FillingPattern const fp    = greedy_filling(sg, omega, K, eps);
      CountRatio const     a     = alpha(sg, omega, K);
      Rational const       bound = eps * (1 - a.value()) * Rational(BigInt(static_cast<unsigned long>(omega.size())));
      json out                   = filling_json(fp, sg);
      out["omega_size"]          = omega.size();
      out["coverage_size"]       = fp.coverage.size();
      out["eps"]                 = io::rational_to_json(eps);
      out["alpha"]               = io::ratio_to_json(a);
      out["coverage_bound"]      = io::rational_to_json(bound);
      out["disjoint"]            = eps_disjoint_verify(fp.witnesses);
      sink.json_out(out);
    }

    TilingResult run_tiling(Params const& p, Semigroup const& sg, TilingMode mode) {
      FinSubset const              D     = p.set("D", sg);
      std::vector<FinSubset> const tiles = p.sets("K", sg);
      Rational const               eps   = p.rational("eps");
      if (p.has("n") && p.count("n") != tiles.size()) {
        throw ConfigError("--n: " + p.one("n") + " does not match the " + std::to_string(tiles.size())
                          + " tiles given with --K");
      }
      return filling_theorem_run(sg, D, tiles, eps, mode);
    }

    void cmd_tile(JobConfig const& c, Sink const& sink) {
      Params const     p(c);
      Semigroup const  sg   = semigroup_of(c);
      TilingMode const mode = in_field("--mode", [&] { return tiling_mode_from_string(p.one("mode")); });
      sink.json_out(tiling_json(run_tiling(p, sg, mode), sg));
    }

    void cmd_ow(JobConfig const& c, Sink const& sink) {
      Params const         p(c);
      Semigroup const      sg     = semigroup_of(c);
      FolnerSequence const seq    = folner_of(p, "folner", sg);
      SetFunction const    h      = set_function_of(p, sg);
      std::size_t const    max    = p.count("max");
      std::size_t const    window = p.count("window");
      check_window(max, window);
      OWEstimate const est = ow_estimate(h, seq, max, window, c.jobs);
      if (c.format == "json") {
        json out = summary_json(est);
        out["rows"] = json::array();
        for (auto const& r : est.rows) {
          out["rows"].push_back({{"n", r.index},
                                 {"card", r.cardinality},
                                 {"h", io::real_to_json(r.value)},
                                 {"ratio", io::real_to_json(r.ratio)}});
        }
        sink.json_out(out);
        return;
      }
      sink.write(rows_csv(est));
      sink.summary(summary_json(est));
    }

    void cmd_entropy(JobConfig const& c, Sink const& sink) {
      Params const p(c);
      std::optional<Semigroup> given;
      if (!c.semigroup.empty()) {
        given = semigroup_of(c);
        if (given->family() != Family::int_lattice && given->family() != Family::nat_monoid) {
          throw DomainError("entropy: subshifts live on zd:<d> or nat:<d>, not " + given->name());
        }
      }
      SftSpec const sft = in_field("--sft", [&] {
        return io::parse_sft(p.one("sft"), given ? given->dimension() : 0);
      });
      Semigroup const      sg     = given ? *given : Semigroup::int_lattice(sft.dim());
      FolnerSequence const seq    = folner_of(p, "folner", sg);
      std::size_t const    max    = p.count("max");
      std::size_t const    window = p.count("window");
      check_window(max, window);
      std::uint64_t const budget = default_budget();

      std::vector<BigInt> counts(max);
      OWEstimate          est;
      est.window = window;
      est.rows.resize(max);
      detail::parallel_for(max, c.jobs, [&](std::size_t r) {
        FinSubset const F = seq(r + 1);
        counts[r]         = pattern_count(sft, F, budget);
        double const h    = log_count(counts[r]);
        est.rows[r]       = {r + 1, F.size(), h, h / static_cast<double>(F.size())};
      });
      double lo = est.rows[max - window].ratio, hi = lo, sum = 0;
      for (std::size_t r = max - window; r < max; ++r) {
        lo = std::min(lo, est.rows[r].ratio);
        hi = std::max(hi, est.rows[r].ratio);
        sum += est.rows[r].ratio;
      }
      est.lambda_hat = sum / static_cast<double>(window);
      est.cauchy_gap = hi - lo;

      if (c.format == "json") {
        json out    = summary_json(est);
        out["rows"] = json::array();
        for (std::size_t r = 0; r < max; ++r) {
          out["rows"].push_back({{"n", est.rows[r].index},
                                 {"card", est.rows[r].cardinality},
                                 {"count", counts[r].get_str()},
                                 {"h", io::real_to_json(est.rows[r].value)},
                                 {"ratio", io::real_to_json(est.rows[r].ratio)}});
        }
        sink.json_out(out);
        return;
      }
      std::string csv = "n,card,count,h,ratio\n";
      for (std::size_t r = 0; r < max; ++r) {
        auto const& row = est.rows[r];
        csv += std::to_string(row.index) + "," + std::to_string(row.cardinality) + ","
               + counts[r].get_str() + "," + io::format_real(row.value) + ","
               + io::format_real(row.ratio) + "\n";
      }
      sink.write(csv);
      sink.summary(summary_json(est));
    }

    void cmd_certify(JobConfig const& c, Sink const& sink) {
      Params const       p(c);
      Semigroup const    sg     = semigroup_of(c);
      SetFunction const  h      = set_function_of(p, sg);
      TilingResult const tiling = run_tiling(p, sg, TilingMode::best_effort);
      double             lambda = 0;
      json               estimate;
      if (p.has("lambda")) {
        lambda = p.rational("lambda").get_d();
      } else {
        FolnerSequence const seq    = folner_of(p, "folner", sg);
        std::size_t const    max    = p.count("max");
        std::size_t const    window = p.count("window");
        check_window(max, window);
        OWEstimate const est = ow_estimate(h, seq, max, window, c.jobs);
        lambda               = est.lambda_hat;
        estimate             = summary_json(est);
      }
      Certificate const cert = ow_certificate(sg, h, tiling, lambda, tiling.eps);
      json              links = json::array();
      for (auto const& l : cert.links) {
        links.push_back({{"name", l.name},
                         {"lhs", io::real_to_json(l.lhs)},
                         {"rhs", io::real_to_json(l.rhs)},
                         {"holds", l.holds}});
      }
      json out = {{"passed", cert.passed()},
                  {"lambda_hat", io::real_to_json(cert.lambda_hat)},
                  {"eps", io::rational_to_json(tiling.eps)},
                  {"singleton_bound", io::real_to_json(cert.singleton_bound)},
                  {"final_bound", io::real_to_json(cert.final_bound)},
                  {"observed_ratio", io::real_to_json(cert.observed_ratio)},
                  {"links", links},
                  {"tiling",
                   {{"achieved", io::ratio_to_json(tiling.achieved)},
                    {"residual_size", tiling.residual.size()},
                    {"stopped_early", tiling.stopped_early}}}};
      if (!estimate.is_null()) {
        out["estimate"] = estimate;
      }
      sink.json_out(out);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // JobConfig
  ////////////////////////////////////////////////////////////////////////

  json JobConfig::to_json() const {
    json p = json::object();
    for (auto const& [key, values] : params) {
      p[key] = values;
    }
    return {{"command", command},
            {"semigroup", semigroup},
            {"params", p},
            {"output", output},
            {"format", format},
            {"jobs", jobs}};
  }

  JobConfig JobConfig::from_json(json const& j) {
    if (!j.is_object()) {
      throw ConfigError("config: expected a JSON object");
    }
    static std::set<std::string> const known
        = {"command", "semigroup", "params", "output", "format", "jobs"};
    for (auto const& [key, value] : j.items()) {
      if (known.count(key) == 0) {
        throw ConfigError(key + ": unknown field");
      }
    }
    auto text = [&](char const* field, bool required) -> std::string {
      if (!j.contains(field)) {
        if (required) {
          throw ConfigError(std::string(field) + ": missing");
        }
        return "";
      }
      if (!j[field].is_string()) {
        throw ConfigError(std::string(field) + ": expected a string");
      }
      return j[field].get<std::string>();
    };
    JobConfig c;
    c.command   = text("command", true);
    c.semigroup = text("semigroup", false);
    c.output    = text("output", false);
    c.format    = text("format", false);
    if (j.contains("jobs")) {
      if (!j["jobs"].is_number_unsigned() || j["jobs"].get<unsigned>() == 0) {
        throw ConfigError("jobs: expected a positive integer");
      }
      c.jobs = j["jobs"].get<unsigned>();
    }
    if (j.contains("params")) {
      if (!j["params"].is_object()) {
        throw ConfigError("params: expected an object");
      }
      for (auto const& [key, value] : j["params"].items()) {
        std::vector<std::string> values;
        auto                     scalar = [&](json const& v) {
          if (v.is_string()) {
            values.push_back(v.get<std::string>());
          } else if (v.is_number_integer()) {
            values.push_back(v.dump());
          } else {
            throw ConfigError("params." + key + ": expected a string, an integer or an array of them");
          }
        };
        if (value.is_array()) {
          for (auto const& v : value) {
            scalar(v);
          }
        } else {
          scalar(value);
        }
        c.params[key] = std::move(values);
      }
    }
    return c;
  }

  std::vector<std::string> const& commands() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& s : command_specs()) {
        out.push_back(s.name);
      }
      return out;
    }();
    return names;
  }

  JobConfig canonical(JobConfig const& config) {
    CommandSpec const& spec = spec_of(config.command);
    JobConfig          c    = config;
    if (c.format.empty()) {
      c.format = spec.default_format;
    }
    if (c.format != "json" && c.format != "csv") {
      throw ConfigError("format: expected json or csv, got '" + c.format + "'");
    }
    if (c.format == "csv" && !spec.csv_allowed) {
      throw ConfigError("format: command '" + c.command + "' only writes json");
    }
    if (c.jobs == 0) {
      throw ConfigError("jobs: expected a positive integer");
    }
    if (spec.needs_semigroup && c.semigroup.empty()) {
      throw ConfigError("semigroup: required for command '" + c.command + "'");
    }
    for (auto const& [key, values] : c.params) {
      auto it = std::find_if(spec.params.begin(), spec.params.end(),
                             [&](ParamSpec const& p) { return p.name == key; });
      if (it == spec.params.end()) {
        throw ConfigError("--" + key + ": not an option of '" + c.command + "'");
      }
      if (values.empty()) {
        throw ConfigError("--" + key + ": no value given");
      }
      if (values.size() > 1 && !it->repeatable) {
        throw ConfigError("--" + key + ": given more than once");
      }
    }
    for (auto const& p : spec.params) {
      if (c.params.count(p.name) != 0) {
        continue;
      }
      if (p.required) {
        throw ConfigError("--" + p.name + ": required for command '" + c.command + "'");
      }
      if (!p.fallback.empty()) {
        c.params[p.name] = {p.fallback};
      }
    }
    return c;
  }

  int run(JobConfig const& config, std::ostream& out, std::ostream& err) {
    try {
      JobConfig const c = canonical(config);
      Sink const      sink{c, out, err};
      if (c.command == "boundary" || c.command == "alpha") {
        cmd_boundary(c, sink, c.command == "alpha");
      } else if (c.command == "folner-report") {
        cmd_folner_report(c, sink);
      } else if (c.command == "fill") {
        cmd_fill(c, sink);
      } else if (c.command == "tile") {
        cmd_tile(c, sink);
      } else if (c.command == "ow") {
        cmd_ow(c, sink);
      } else if (c.command == "entropy") {
        cmd_entropy(c, sink);
      } else {
        cmd_certify(c, sink);
      }
      return 0;
    } catch (ConfigError const& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    } catch (ResourceError const& e) {
      err << "error: " << e.what() << '\n';
      return 3;
    } catch (std::bad_alloc const&) {
      err << "error: out of memory\n";
      return 3;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
  }

  std::string csv_columns(std::string const& command) {
    if (command == "folner-report") {
      return "CSV columns: n,card,alpha_num,alpha_den,max_defect_num,max_defect_den\n"
             "  n              index of the Følner set F_n\n"
             "  card           |F_n|\n"
             "  alpha_num/den  alpha(F_n, K) = |boundary_K(F_n)| / |F_n| (unreduced)\n"
             "  max_defect_*   max over k in K of |kF_n \\ F_n| / |F_n| (unreduced)";
    }
    if (command == "ow") {
      return "CSV columns: n,card,h,ratio\n"
             "  n      index of the Følner set F_n\n"
             "  card   |F_n|\n"
             "  h      h(F_n), 12 significant digits\n"
             "  ratio  h(F_n)/|F_n|\n"
             "Summary {lambda_hat, cauchy_gap, window, warnings} goes to <output>.summary.json,\n"
             "or to standard error when writing to standard output.";
    }
    if (command == "entropy") {
      return "CSV columns: n,card,count,h,ratio\n"
             "  n      index of the Følner set F_n\n"
             "  card   |F_n|\n"
             "  count  number of locally admissible patterns on F_n (exact)\n"
             "  h      log count, 12 significant digits\n"
             "  ratio  h/|F_n|\n"
             "Summary {lambda_hat, cauchy_gap, window, warnings} goes to <output>.summary.json,\n"
             "or to standard error when writing to standard output.";
    }
    return "Writes JSON only.";
  }

}  // namespace owlab::cli
