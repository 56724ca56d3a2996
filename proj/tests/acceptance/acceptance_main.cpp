// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria are exercised at desk scale with pinned bounds and budgets.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "intens/canonical.hpp"
#include "intens/conform.hpp"
#include "intens/corpus.hpp"
#include "intens/encode.hpp"
#include "intens/generator.hpp"
#include "intens/match.hpp"
#include "intens/parse.hpp"
#include "intens/pretty.hpp"
#include "intens/reduce.hpp"
#include "intens/validity.hpp"
#include "support/oracle.hpp"

using namespace intens;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok, double seconds,
            double budget_seconds, const std::string& detail = "") {
  const bool in_budget = seconds <= budget_seconds;
  const bool pass = ok && in_budget;
  if (!pass) ++failures;
  std::ostringstream line;
  line << (pass ? "[PASS] " : "[FAIL] ") << number << " " << label << " ("
       << seconds << "s";
  if (!in_budget) line << ", over budget " << budget_seconds << "s";
  line << ")";
  if (!ok && !detail.empty()) line << ": " << detail;
  std::cout << line.str() << "\n";
}

double run_timed(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(end - start).count();
}

Language lang(const char* code) { return *language_from_code(code); }

Process proc(const char* text, const char* code) {
  return parse_process(text, lang(code));
}

const Limits limits{64, 10000};

// 1. Introduction triple: each pair has exactly one reduction, byte-exact.
void criterion_golden_triple() {
  bool ok = true;
  std::string detail;
  const double secs = run_timed([&] {
    const struct {
      const char* text;
      const char* successor;
    } cases[] = {
        {"<a*b> | (x*y).ok", "ok"},
        {"<a*b> | (z).<z>", "<a*b>"},
        {"<a*b> | (=a*=b).ok", "ok"},
    };
    for (const auto& c : cases) {
      const ReductionGraph g = explore(proc(c.text, "AMDI"), lang("AMDI"), limits);
      if (g.nodes.size() != 2 || g.edges[0].size() != 1 ||
          g.nodes[g.edges[0][0]].key != c.successor) {
        ok = false;
        detail = std::string(c.text) + " did not reduce exactly to " + c.successor;
        return;
      }
    }
  });
  report(1, "introduction triple, byte-exact single reductions", ok, secs, 1.0,
         detail);
}

// 2. match_one agrees with the enumerate-and-check oracle on the full
// depth-3 sweep.
void criterion_match_oracle() {
  bool ok = true;
  std::string detail;
  int cases = 0;
  const double secs = run_timed([&] {
    const std::vector<Name> alphabet{Name("a"), Name("b")};
    const auto terms = testing::all_terms(3, alphabet);
    const auto patterns = testing::all_patterns(3, {Name("x"), Name("y")}, alphabet);
    for (const Term& t : terms) {
      for (const Pattern& p : patterns) {
        ++cases;
        const auto fast = match_one(t, p);
        const auto slow = testing::oracle_match(t, p);
        if (fast.has_value() != slow.has_value() || (fast && !(*fast == *slow))) {
          ok = false;
          detail = "disagreement on term " + pretty(t) + " pattern " + pretty(p);
          return;
        }
      }
    }
    if (cases < 2000) {
      ok = false;
      detail = "sweep too small: " + std::to_string(cases) + " cases";
    }
  });
  report(2, "match oracle equivalence (" + std::to_string(cases) + " cases)", ok,
         secs, 10.0, detail);
}

// 3. Graph-shape lemmas on the corpus: arity and medium give node-for-node
// isomorphisms, synchronism gives the two-step profile with completion.
void criterion_encoding_lemmas(const std::vector<SourceUnit>& units) {
  bool ok = true;
  std::string detail;
  const double secs = run_timed([&] {
    struct Job {
      EncodingPipeline pipeline;
      bool two_step;
      std::set<std::string> languages_seen;
      int checked = 0;
    };
    std::vector<Job> jobs;
    jobs.push_back({EncodingPipeline::arity(), false, {}, 0});
    jobs.push_back({EncodingPipeline::medium(), false, {}, 0});
    jobs.push_back({EncodingPipeline::synch(), true, {}, 0});
    for (Job& job : jobs) {
      for (const SourceUnit& u : units) {
        if (!job.pipeline.applicable(u.language)) continue;
        ++job.checked;
        job.languages_seen.insert(code(u.language));
        const ReductionGraph gs = explore(u.body, u.language, limits);
        const ReductionGraph gt = explore(job.pipeline.apply(u.body, u.language),
                                          job.pipeline.target_of(u.language), limits);
        auto enc = [&](const Process& p) { return job.pipeline.apply(p, u.language); };
        const GraphMatch m = job.two_step ? synch_two_step_profile(gs, gt, enc)
                                          : graphs_isomorphic_via(gs, gt, enc);
        if (!m.ok) {
          ok = false;
          detail = job.pipeline.label() + " on " + u.name + ": " + m.detail;
          return;
        }
      }
      if (job.checked < 10 || job.languages_seen.size() < 12) {
        ok = false;
        detail = job.pipeline.label() + " covered only " +
                 std::to_string(job.languages_seen.size()) + " source languages";
        return;
      }
    }
    if (units.size() < 30) {
      ok = false;
      detail = "corpus has fewer than 30 units";
    }
  });
  report(3, "encoding lemmas as graph checks over the corpus", ok, secs, 30.0,
         detail);
}

// 4. Full five-criteria battery for the three encodings and the composite
// pipelines, plus the three mutants each producing a visible failure.
void criterion_validity_battery(const std::vector<SourceUnit>& units) {
  bool ok = true;
  std::string detail;
  const double secs = run_timed([&] {
    const std::vector<EncodingPipeline> honest = {
        EncodingPipeline::synch(),
        EncodingPipeline::arity(),
        EncodingPipeline::medium(),
    };
    for (const auto& pipeline : honest) {
      const Report r = run_corpus(units, pipeline, limits);
      if (r.failed != 0 || r.inconclusive != 0) {
        ok = false;
        for (const Verdict& v : r.verdicts) {
          if (v.status != Status::pass) {
            detail = pipeline.label() + " " + v.unit + " " +
                     to_string(v.criterion) + ": " + v.witness;
            break;
          }
        }
        return;
      }
    }
    for (const char* from : {"SPCN", "SPCO"}) {
      std::vector<SourceUnit> filtered;
      for (const SourceUnit& u : units) {
        if (code(u.language) == from) filtered.push_back(u);
      }
      if (filtered.empty()) {
        ok = false;
        detail = std::string("no corpus units in ") + from;
        return;
      }
      const Report r =
          run_corpus(filtered, EncodingPipeline::into(lang("AMDI")), limits);
      if (r.failed != 0 || r.inconclusive != 0) {
        ok = false;
        detail = std::string(from) + "->AMDI battery not all-Pass";
        return;
      }
    }
    for (const SynchMutation m : {SynchMutation::drop_ack, SynchMutation::drop_ok,
                                  SynchMutation::loop_ack}) {
      const Report r = run_corpus(units, EncodingPipeline::synch(m), limits);
      bool witnessed = false;
      for (const Verdict& v : r.verdicts) {
        if (v.status == Status::fail && !v.witness.empty()) {
          witnessed = true;
          std::cout << "    mutant " << EncodingPipeline::synch(m).label()
                    << " witness: " << v.unit << " " << to_string(v.criterion)
                    << ": " << v.witness << "\n";
          break;
        }
      }
      if (!witnessed) {
        ok = false;
        detail = "mutant " + EncodingPipeline::synch(m).label() +
                 " produced no failure with witness";
        return;
      }
    }
  });
  report(4, "five-criteria battery and mutant detection", ok, secs, 120.0, detail);
}

// 5. Stuck units stay stuck under every applicable encoding.
void criterion_stuck_preserved(const std::vector<SourceUnit>& units) {
  bool ok = true;
  std::string detail;
  const double secs = run_timed([&] {
    const std::vector<EncodingPipeline> pipelines = {
        EncodingPipeline::synch(), EncodingPipeline::arity(),
        EncodingPipeline::medium(), EncodingPipeline::into(lang("AMDI"))};
    for (const SourceUnit& u : units) {
      if (!redexes(canonicalize(u.body), u.language).empty()) continue;
      for (const auto& pipeline : pipelines) {
        if (!pipeline.applicable(u.language)) continue;
        const Process encoded = pipeline.apply(u.body, u.language);
        if (!redexes(canonicalize(encoded), pipeline.target_of(u.language)).empty()) {
          ok = false;
          detail = u.name + " is stuck but its " + pipeline.label() +
                   " encoding reduces";
          return;
        }
      }
    }
  });
  report(5, "stuck units stay stuck under encoding", ok, secs, 30.0, detail);
}

// 6. Arity firewall: encoded tuples meet if and only if the arities agree
// and the names are equal, exhaustively over a 4-name alphabet.
void criterion_arity_firewall() {
  bool ok = true;
  std::string detail;
  int cases = 0;
  const double secs = run_timed([&] {
    const std::vector<Name> alphabet{Name("a"), Name("b"), Name("c"), Name("d")};
    const Language src = lang("APDN");

    std::vector<std::vector<std::vector<Name>>> tuples(5);
    tuples[0].push_back({});
    for (int len = 1; len <= 4; ++len) {
      for (const auto& shorter : tuples[len - 1]) {
        for (const Name& n : alphabet) {
          auto longer = shorter;
          longer.push_back(n);
          tuples[len].push_back(std::move(longer));
        }
      }
    }

    auto encoded_output_spine = [&](const std::vector<Name>& names) {
      std::vector<Term> args;
      for (const Name& n : names) args.push_back(Term::leaf(n));
      const Process out = Process::output(std::nullopt, std::move(args), std::nullopt);
      return encode_arity(out, src).args()[0];
    };
    auto encoded_input_spine = [&](const std::vector<Name>& names) {
      std::vector<Pattern> pats;
      for (const Name& n : names) pats.push_back(Pattern::name_match(Term::leaf(n)));
      const Process in =
          Process::input(std::nullopt, std::move(pats), Process::nil());
      return encode_arity(in, src).patterns()[0];
    };

    for (int i = 1; i <= 4 && ok; ++i) {
      for (int j = 1; j <= 4 && ok; ++j) {
        for (const auto& out_names : tuples[i]) {
          for (const auto& in_names : tuples[j]) {
            ++cases;
            const bool matched =
                match_one(encoded_output_spine(out_names), encoded_input_spine(in_names))
                    .has_value();
            const bool expected = i == j && out_names == in_names;
            if (matched != expected) {
              ok = false;
              detail = "arity " + std::to_string(i) + " output vs arity " +
                       std::to_string(j) + " input misbehaved";
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
  });
  report(6, "arity firewall (" + std::to_string(cases) + " pairings)", ok, secs,
         30.0, detail);
}

// 7. Separation witnesses: the wide matcher interacts exactly once with the
// wide output; the one-name-apart matcher never does.
void criterion_separation_witnesses() {
  bool ok = true;
  std::string detail;
  const double secs = run_timed([&] {
    const Language amdi = lang("AMDI");
    for (int k = 1; k <= 3 && ok; ++k) {
      const Process pair = Process::par(wide_output(k), wide_matcher(k));
      const ReductionGraph g = explore(pair, amdi, limits);
      if (g.nodes.size() != 2 || g.edges[0].size() != 1 ||
          g.nodes[g.edges[0][0]].key != "<m>") {
        ok = false;
        detail = "wide pair k=" + std::to_string(k) + " did not reduce to <m>";
        break;
      }
      for (int i = 1; i <= k + 2; ++i) {
        const Process swapped = Process::par(wide_output(k), wide_matcher_swapped(k, i));
        if (!redexes(canonicalize(swapped), amdi).empty()) {
          ok = false;
          detail = "swapped matcher k=" + std::to_string(k) + " i=" +
                   std::to_string(i) + " interacts";
          break;
        }
      }
    }
  });
  report(7, "separation witnesses behave as the impossibility argument needs", ok,
         secs, 30.0, detail);
}

// 8. Round trip on 1000 generated processes per language, and reduction
// preserves conformance on every explored corpus node.
void criterion_roundtrip_conformance(const std::vector<SourceUnit>& units) {
  bool ok = true;
  std::string detail;
  const double secs = run_timed([&] {
    for (const Language& l : all_languages()) {
      std::mt19937_64 rng(0xC0FFEE ^ std::hash<std::string>{}(code(l)));
      for (int i = 0; i < 1000; ++i) {
        const Process p = random_process(l, rng);
        if (!conforms(p, l)) {
          ok = false;
          detail = "generator broke conformance in " + code(l) + ": " + pretty(p);
          return;
        }
        const Process back = parse_process(pretty(p), l);
        if (!alpha_eq(p, back)) {
          ok = false;
          detail = "round trip failed in " + code(l) + ": " + pretty(p);
          return;
        }
      }
    }
    for (const SourceUnit& u : units) {
      const ReductionGraph g = explore(u.body, u.language, limits);
      for (const CanonicalForm& node : g.nodes) {
        if (!conforms(to_process(node), u.language)) {
          ok = false;
          detail = "reduction broke conformance in " + u.name + " at " + node.key;
          return;
        }
      }
    }
  });
  report(8, "round trip and reduction-preserves-conformance", ok, secs, 60.0,
         detail);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string corpus_path = argc > 1 ? argv[1] : "corpus/paper.corpus";
  std::vector<SourceUnit> units;
  try {
    units = load_corpus(corpus_path);
  } catch (const std::exception& e) {
    std::cerr << "cannot load corpus: " << e.what() << "\n";
    return 2;
  }

  criterion_golden_triple();
  criterion_match_oracle();
  criterion_encoding_lemmas(units);
  criterion_validity_battery(units);
  criterion_stuck_preserved(units);
  criterion_arity_firewall();
  criterion_separation_witnesses();
  criterion_roundtrip_conformance(units);

  if (failures == 0) {
    std::cout << "acceptance: all 8 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
