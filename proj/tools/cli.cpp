#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "sk1/arith.hpp"
#include "sk1/conjecture.hpp"
#include "sk1/error.hpp"
#include "sk1/genetic.hpp"
#include "sk1/metacyclic.hpp"
#include "sk1/sk1_abelian.hpp"
#include "sk1/whitehead_rank.hpp"

namespace sk1::cli {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string render(const CyclicDecomposition& d, Format format) {
  if (format == Format::Tsv) return d.to_tsv();
  return "SK1 = " + d.to_human() + "\n";
}

std::string join(std::span<const std::int64_t> xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

int require_n(const RunConfig& c, int min_n) {
  if (!c.n) throw Usage("--n is required");
  if (*c.n < min_n) throw Usage("--n must be at least " + std::to_string(min_n));
  return *c.n;
}

std::string run_abelian(const RunConfig& c) {
  if (c.orders.empty()) throw Usage("--orders is required");
  const auto group = make_group(c.prime, c.orders);
  return render(sk1::sk1(group, c.pipeline), c.format);
}

std::string run_metacyclic(const RunConfig& c) {
  const auto group = make_metacyclic(c.prime, require_n(c, 3));
  return render(sk1_metacyclic(group, c.pipeline), c.format);
}

std::string run_conjecture(const RunConfig& c, int& exit_code) {
  const int n = require_n(c, 2);
  const auto predicted = predicted_decomposition(c.prime, n);
  if (!c.verify) {
    if (c.format == Format::Tsv) return predicted.as_decomposition().to_tsv();
    return "predicted SK1 = " + predicted.as_decomposition().to_human() + "\n";
  }
  const std::int64_t order = checked_pow(c.prime, n);
  const auto computed = sk1::sk1(make_group(c.prime, {order, order}), c.pipeline);
  const auto report = verify(c.prime, n, computed);

  std::ostringstream os;
  const char* sep = c.format == Format::Tsv ? "\t" : "  ";
  os << "i" << sep << "divisor" << sep << "predicted" << sep << "computed\n";
  for (int i = 1; i < n; ++i) {
    const std::int64_t want = predicted.multiplicity(i);
    const auto diff = report.diffs.find(i);
    const std::int64_t got = diff == report.diffs.end() ? want : diff->second.computed;
    os << i << sep << checked_pow(c.prime, i) << sep << want << sep << got << "\n";
  }
  for (const auto& d : report.unexpected) {
    os << "-" << sep << d.get_str() << sep << 0 << sep << computed.multiplicity(d) << "\n";
  }
  os << (report.match ? "MATCH" : "MISMATCH") << "\n";
  if (!report.match) exit_code = kExitMismatch;
  return os.str();
}

std::string run_rank(const RunConfig& c) {
  if (!c.family) throw Usage("--family is required");
  if (!c.n) throw Usage("--n is required");
  const std::int64_t rank = *c.family == Family::Abelian ? rank_square_abelian(c.prime, *c.n)
                                                         : rank_metacyclic(c.prime, *c.n);
  return std::to_string(rank) + "\n";
}

std::string run_basis(const RunConfig& c) {
  const bool abelian = c.family ? *c.family == Family::Abelian : !c.orders.empty();
  std::ostringstream os;
  if (abelian) {
    if (c.orders.empty()) throw Usage("--orders is required for an abelian basis");
    const auto group = make_group(c.prime, c.orders);
    for (const auto& s : genetic_basis_abelian(group)) {
      if (c.format == Format::Tsv) {
        os << s.index() << "\t" << join(s.hom().tuple, ",") << "\n";
      } else {
        os << "index " << s.index() << "  hom (" << join(s.hom().tuple, ",") << ")\n";
      }
    }
    return os.str();
  }
  const auto group = make_metacyclic(c.prime, require_n(c, 3));
  for (const auto& s : genetic_basis_metacyclic(group)) {
    const char* kind = s.normal() ? "normal" : "non-normal";
    const std::int64_t index = group.order() / s.order();
    if (c.format == Format::Tsv) {
      os << index << "\t" << s.label().to_string() << "\t" << s.quotient_order() << "\t" << kind
         << "\n";
    } else {
      os << "index " << index << "  " << s.label().to_string() << "  quotient "
         << s.quotient_order() << "  " << kind << "\n";
    }
  }
  return os.str();
}

unsigned parse_threads(const std::string& text) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw Usage("SK1_THREADS must be a non-negative integer");
  return value;
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    switch (config.command) {
      case Command::Abelian:
        result.out = run_abelian(config);
        break;
      case Command::Metacyclic:
        result.out = run_metacyclic(config);
        break;
      case Command::Conjecture:
        result.out = run_conjecture(config, result.exit_code);
        break;
      case Command::Rank:
        result.out = run_rank(config);
        break;
      case Command::Basis:
        result.out = run_basis(config);
        break;
    }
  } catch (const Usage& e) {
    result = {kExitInvalid, "", std::string("error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::TooLarge ? kExitTooLarge : kExitInvalid;
    result = {code, "", std::string("error: ") + e.what() + "\n"};
  }
  return result;
}

RunResult run_args(const std::vector<std::string>& args,
                   const std::optional<std::string>& threads_env) {
  RunConfig config;
  CLI::App app{"SK1 of group rings of odd p-groups", "sk1"};
  app.require_subcommand(1);

  const std::map<std::string, Strategy> strategies{{"representatives", Strategy::Representatives},
                                                   {"exhaustive", Strategy::Exhaustive}};
  const std::map<std::string, Format> formats{{"human", Format::Human}, {"tsv", Format::Tsv}};
  const std::map<std::string, SnfRoute> routes{{"local", SnfRoute::Local},
                                               {"exact", SnfRoute::Exact}};
  const std::map<std::string, Family> families{{"abelian", Family::Abelian},
                                               {"metacyclic", Family::Metacyclic}};

  auto add_prime = [&](CLI::App* sub) {
    sub->add_option("--prime,-p", config.prime, "odd prime p")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_pipeline = [&](CLI::App* sub) {
    sub->add_option("--max-order", config.pipeline.max_order,
                    "largest group order walked element by element")
        ->check(CLI::PositiveNumber);
    sub->add_option("--snf", config.pipeline.route, "Smith form route")
        ->transform(CLI::CheckedTransformer(routes, CLI::ignore_case));
  };
  auto add_strategy = [&](CLI::App* sub) {
    sub->add_option("--strategy", config.pipeline.strategy, "choice of elements h")
        ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
  };
  auto add_orders = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--orders", config.orders, "cyclic factor orders, e.g. 27,27")
                    ->delimiter(',');
    if (required) opt->required();
    return opt;
  };
  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n,-n", config.n, "exponent n");
    if (required) opt->required();
    return opt;
  };

  auto* abelian = app.add_subcommand("abelian", "SK1 of an abelian p-group");
  add_prime(abelian);
  add_orders(abelian, true);
  add_strategy(abelian);
  add_pipeline(abelian);
  add_format(abelian);
  abelian->callback([&] { config.command = Command::Abelian; });

  auto* meta = app.add_subcommand("metacyclic", "SK1 of M_n(p)");
  add_prime(meta);
  add_n(meta, true);
  add_pipeline(meta);
  add_format(meta);
  meta->callback([&] { config.command = Command::Metacyclic; });

  auto* conj = app.add_subcommand("conjecture", "predicted SK1 of C_{p^n} x C_{p^n}");
  add_prime(conj);
  add_n(conj, true);
  conj->add_flag("--verify", config.verify, "compare against the computed group");
  add_strategy(conj);
  add_pipeline(conj);
  add_format(conj);
  conj->callback([&] { config.command = Command::Conjecture; });

  auto* rank = app.add_subcommand("rank", "free rank of the Whitehead group");
  add_prime(rank);
  add_n(rank, true);
  rank->add_option("--family", config.family, "abelian (C_{p^n}^2) or metacyclic (M_n(p))")
      ->required()
      ->transform(CLI::CheckedTransformer(families, CLI::ignore_case));
  rank->callback([&] { config.command = Command::Rank; });

  auto* basis = app.add_subcommand("basis", "genetic basis");
  add_prime(basis);
  auto* orders_opt = add_orders(basis, false);
  auto* n_opt = add_n(basis, false);
  orders_opt->excludes(n_opt);
  add_format(basis);
  basis->callback([&] { config.command = Command::Basis; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (threads_env && !threads_env->empty()) config.pipeline.threads = parse_threads(*threads_env);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitInvalid, out.str(), err.str()};
  } catch (const Usage& e) {
    return {kExitInvalid, "", std::string("error: ") + e.what() + "\n"};
  }
  return run(config);
}

}  // namespace sk1::cli
