#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "piblocks/errors.hpp"
#include "piblocks/landau.hpp"
#include "piblocks/report.hpp"

namespace {

using namespace piblocks;

PrimeSet parse_pi(const std::string& text, long long group_order) {
  if (text == "all") return PrimeSet::primes_of(group_order);
  std::vector<long long> primes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) primes.push_back(std::stoll(item));
  return PrimeSet(std::move(primes));
}

BoundOracle parse_oracle(const std::string& spec) {
  for (const std::string& name : BoundOracle::builtin_names())
    if (spec == name) return BoundOracle::builtin(spec);

  std::ifstream in(spec);
  if (!in) throw InputError("oracle '" + spec + "' is neither built-in nor a readable file");
  std::vector<std::pair<mpz_class, mpz_class>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string arg, value, extra;
    if (!(ls >> arg)) continue;
    if (!(ls >> value) || (ls >> extra))
      throw InputError(spec + ": line " + std::to_string(line_no) +
                       ": expected 'argument value'");
    rows.emplace_back(mpz_class(arg), mpz_class(value));
  }
  return BoundOracle::from_table(spec, std::move(rows));
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw InputError("cannot open output file " + output_path);
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact pi-block computations for finite pi-separable permutation groups"};
  app.require_subcommand(1);

  std::string group_file, pi_text = "all", output_path, corpus_dir;
  long long max_order = 120;
  int gamma_k = 1;
  std::string alpha_spec = "id", beta_spec = "id";
  long long max_digits = -1;

  CLI::App* analyze = app.add_subcommand("analyze", "pi-blocks and defect data of one group");
  analyze->add_option("--group", group_file, "group description file")->required();
  analyze->add_option("--pi", pi_text, "comma-separated primes, or 'all'");
  analyze->add_option("--output", output_path, "write the report here instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "run the property suite over a corpus");
  verify->add_option("--corpus", corpus_dir, "directory of .grp files")->required();
  verify->add_option("--max-order", max_order, "skip groups above this order")
      ->check(CLI::PositiveNumber);
  verify->add_option("--output", output_path, "write the report here instead of stdout");

  CLI::App* gamma = app.add_subcommand("gamma", "evaluate the recursive Landau bound");
  gamma->add_option("--k", gamma_k, "number of characters")
      ->required()
      ->check(CLI::PositiveNumber);
  gamma->add_option("--alpha", alpha_spec, "oracle name or table file");
  gamma->add_option("--beta", beta_spec, "oracle name or table file");
  gamma->add_option("--max-digits", max_digits, "abort past this many decimal digits");

  CLI::App* table = app.add_subcommand("table", "exact character table of one group");
  table->add_option("--group", group_file, "group description file")->required();
  table->add_option("--output", output_path, "write the table here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    CorpusEntry entry = load_group_file(group_file);
    Workspace ws;
    emit(analyze_entry(ws, entry, parse_pi(pi_text, entry.group->order())), output_path);
    return 0;
  }

  if (verify->parsed()) {
    VerifySummary summary = verify_corpus(load_corpus_dir(corpus_dir), max_order);
    emit(summary.report, output_path);
    return summary.exit_code();
  }

  if (gamma->parsed()) {
    if (max_digits < 0) {
      if (gamma_k > 6)
        throw InputError("k > 6 explodes; pass an explicit --max-digits to proceed");
      max_digits = 100000;
    }
    GammaTrace trace =
        gamma_bound(gamma_k, parse_oracle(alpha_spec), parse_oracle(beta_spec), max_digits);
    std::ostringstream os;
    os << "gamma k=1 value=1\n";
    for (const GammaStep& s : trace.steps)
      os << "step k=" << s.k << " previous=" << s.previous.get_str()
         << " factorial_arg=" << s.factorial_arg.get_str()
         << " alpha=" << s.alpha_value.get_str() << " beta_base=" << s.beta_base.get_str()
         << " beta_term=" << s.beta_term.get_str() << " value=" << s.value.get_str()
         << '\n';
    os << "gamma k=" << trace.k << " value=" << trace.value.get_str() << '\n';
    emit(os.str(), output_path);
    return 0;
  }

  CorpusEntry entry = load_group_file(group_file);
  Workspace ws;
  emit(table_dump(ws, entry), output_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const piblocks::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const piblocks::GammaLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const piblocks::OracleDomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
