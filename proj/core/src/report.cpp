#include "piblocks/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "piblocks/defect.hpp"
#include "piblocks/errors.hpp"
#include "piblocks/numeric.hpp"

namespace piblocks {

namespace {

std::string degrees_of(const CharacterTable& t, const PiBlock& b) {
  std::ostringstream os;
  for (std::size_t i = 0; i < b.members.size(); ++i) {
    if (i) os << ',';
    os << t.degrees[b.members[i]];
  }
  return os.str();
}

}  // namespace

std::string analyze_entry(Workspace& ws, const CorpusEntry& entry, const PrimeSet& pi) {
  GroupPtr g = ws.canonical(entry.group);
  const CharacterTable& t = ws.table(g);
  const bool separable = is_pi_separable(g, pi);

  std::ostringstream os;
  os << "group=" << entry.name << " order=" << g->order() << " degree=" << g->degree()
     << " classes=" << t.class_count() << " exponent=" << g->exponent()
     << " pi=" << pi.to_string() << " separable=" << (separable ? "true" : "false")
     << '\n';

  std::vector<PiBlock> blocks = ws.pi_blocks_of(g, pi);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const PiBlock& b = blocks[bi];
    os << "block=" << bi + 1 << " k=" << b.k() << " degrees=" << degrees_of(t, b);
    if (separable) {
      DefectDatum d = defect_group(ws, g, pi, b);
      os << " defect_order=" << d.order << " defect_iso=" << d.label.name;
      if (b.k() <= 3) {
        TheoremBVerdict v = check_theorem_b(b, d);
        os << " thmB=" << (v.holds ? "pass" : "fail");
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string table_dump(Workspace& ws, const CorpusEntry& entry) {
  GroupPtr g = ws.canonical(entry.group);
  const CharacterTable& t = ws.table(g);

  std::ostringstream os;
  os << "# group=" << entry.name << " order=" << g->order()
     << " classes=" << t.class_count() << " exponent=" << g->exponent()
     << " conductor=" << t.conductor << '\n';
  os << "# class sizes:";
  for (const ConjClass& c : g->classes()) os << ' ' << c.size;
  os << '\n';
  os << "# class orders:";
  for (const ConjClass& c : g->classes()) os << ' ' << c.element_order;
  os << '\n';
  os << "# class reps:";
  for (const ConjClass& c : g->classes()) os << ' ' << c.rep.cycle_string();
  os << '\n';
  for (int chi = 0; chi < t.character_count(); ++chi) {
    os << t.degrees[chi];
    for (int c = 0; c < t.class_count(); ++c)
      os << ' ' << t.rows[chi][c].rebase(t.conductor).to_string();
    os << '\n';
  }
  return os.str();
}

std::vector<PrimeSet> pi_subsets_for_order(long long n) {
  std::vector<long long> pool = prime_divisors(n);
  pool.push_back(smallest_coprime_prime(n));
  std::sort(pool.begin(), pool.end());

  std::vector<std::vector<long long>> subsets;
  const std::size_t total = std::size_t{1} << pool.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<long long> subset;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(pool[i]);
    subsets.push_back(std::move(subset));
  }
  std::sort(subsets.begin(), subsets.end());
  std::vector<PrimeSet> out;
  out.reserve(subsets.size());
  for (auto& s : subsets) out.emplace_back(std::move(s));
  return out;
}

VerifySummary verify_corpus(const std::vector<CorpusEntry>& entries, long long max_order) {
  VerifySummary summary;
  std::ostringstream report;
  std::ostringstream failures;
  std::map<std::string, std::pair<long long, long long>> categories;

  for (const CorpusEntry& entry : entries) {
    if (entry.group->order() > max_order) continue;
    ++summary.entries;
    Workspace ws;
    GroupPtr g = ws.canonical(entry.group);

    for (const PrimeSet& pi : pi_subsets_for_order(g->order())) {
      ++summary.pi_runs;
      const bool separable = is_pi_separable(g, pi);
      PropertyReport rep;
      if (separable) {
        rep = verify_block_properties(ws, g, pi);
      } else {
        std::size_t total = 0;
        for (const PiBlock& b : ws.pi_blocks_of(g, pi)) total += b.members.size();
        rep.add("partition", "sum of k(B)",
                total == static_cast<std::size_t>(ws.table(g).character_count()));
      }

      long long run_failures = 0;
      for (const CheckRecord& c : rep.records) {
        auto& cat = categories[c.category];
        ++cat.first;
        if (!c.pass) {
          ++cat.second;
          ++run_failures;
          failures << "FAIL entry=" << entry.name << " pi=" << pi.to_string()
                   << " category=" << c.category << " instance=" << c.instance << '\n';
        }
      }
      summary.checks += static_cast<long long>(rep.records.size());
      summary.failures += run_failures;
      report << "entry=" << entry.name << " order=" << g->order()
             << " pi=" << pi.to_string()
             << " separable=" << (separable ? "true" : "false")
             << " checks=" << rep.records.size() << " failures=" << run_failures
             << '\n';
    }
  }

  if (summary.entries == 0) report << "warning: no corpus entries within the order bound\n";
  report << failures.str();
  for (const auto& [name, counts] : categories)
    report << "category=" << name << " checks=" << counts.first
           << " failures=" << counts.second << '\n';
  report << "total entries=" << summary.entries << " pi_runs=" << summary.pi_runs
         << " checks=" << summary.checks << " failures=" << summary.failures
         << " status=" << (summary.failures == 0 ? "pass" : "fail") << '\n';
  summary.report = report.str();
  return summary;
}

}  // namespace piblocks
