// Command-line front end.  Results go to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 130 interrupted.

#include <atomic>
#include <csignal>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "mackey/brute.hpp"
#include "mackey/finrank.hpp"
#include "mackey/io.hpp"
#include "mackey/socle.hpp"
#include "mackey/symfunc.hpp"
#include "mackey/verify.hpp"

namespace {

using namespace mackey;

constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;
constexpr int kInterrupted = 130;

std::atomic<bool>* g_interrupt = nullptr;

extern "C" void on_sigint(int) {
  if (g_interrupt) g_interrupt->store(true, std::memory_order_relaxed);
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& flag, const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": cannot parse partition \"" + text + "\": " + e.what());
  }
}

enum class Format { text, json };

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text},
                                                                        {"json", Format::json}}));
}

void print_json(const io::Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CancellationToken token;
  g_interrupt = token.raw();
  std::signal(SIGINT, on_sigint);

  CLI::App app{"Socle filtrations and lengths of tensor modules over Mackey Lie algebras"};
  app.require_subcommand(1);

  std::string lambda_text = "-", mu_text = "-", nu_text = "-";
  Format format = Format::text;
  int m = 0, n = 0, k = 0, rank = 0, block = 0;
  std::size_t budget = brute::budget_from_env();
  std::uint64_t seed = verify::kDefaultSeed;
  std::string suite = "all";

  auto* socle = app.add_subcommand("socle", "Socle filtration layers of W_{lambda,mu}");
  socle->add_option("--lambda", lambda_text, "Partition on the V* side (\"3,1\", \"-\" for empty)")->required();
  socle->add_option("--mu", mu_text, "Partition on the V side")->required();
  add_format(socle, format);

  auto* length = app.add_subcommand("length", "Length of (V*)^{(x)m} (x) V^{(x)n}");
  length->add_option("--m", m, "Copies of V*")->required()->check(CLI::NonNegativeNumber);
  length->add_option("--n", n, "Copies of V")->required()->check(CLI::NonNegativeNumber);

  auto* simple_length = app.add_subcommand("simple-length", "Length of W_{lambda,mu}");
  simple_length->add_option("--lambda", lambda_text)->required();
  simple_length->add_option("--mu", mu_text)->required();

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lambda_{mu,nu}");
  lr->add_option("lambda", lambda_text)->required();
  lr->add_option("mu", mu_text)->required();
  lr->add_option("nu", nu_text)->required();

  auto* coproduct_cmd = app.add_subcommand("coproduct", "Coproduct of s_lambda");
  coproduct_cmd->add_option("lambda", lambda_text)->required();
  add_format(coproduct_cmd, format);

  auto* product = app.add_subcommand("product", "Product s_mu s_nu");
  product->add_option("mu", mu_text)->required();
  product->add_option("nu", nu_text)->required();
  add_format(product, format);

  auto* dim = app.add_subcommand("dim", "Dimension of the gl(n)-module V_{lambda,mu}");
  dim->add_option("--rank", rank)->required()->check(CLI::PositiveNumber);
  dim->add_option("--lambda", lambda_text)->required();
  dim->add_option("--mu", mu_text);

  auto* words = app.add_subcommand("words", "Binary words of length m with at most k ones");
  words->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  words->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);

  auto* mixed = app.add_subcommand("mixed", "Simple constituents of V_*^{(x)p} (x) V^{(x)q}");
  mixed->add_option("--p", m)->required()->check(CLI::NonNegativeNumber);
  mixed->add_option("--q", n)->required()->check(CLI::NonNegativeNumber);
  add_format(mixed, format);

  auto* filtration = app.add_subcommand(
      "filtration", "Parabolic socle filtration of S_lambda(C^N*) against the predicted layers");
  filtration->add_option("--rank", rank)->required()->check(CLI::PositiveNumber);
  filtration->add_option("--block", block)->required()->check(CLI::PositiveNumber);
  filtration->add_option("--lambda", lambda_text)->required();
  filtration->add_option("--budget", budget);
  add_format(filtration, format);

  auto* dump = app.add_subcommand("dump", "Plain-text dump of a tensor module (and its parabolic socle filtration)");
  dump->add_option("--rank", rank)->required()->check(CLI::PositiveNumber);
  dump->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  dump->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  dump->add_option("--block", block, "Also dump the socle filtration for this distinguished block");
  dump->add_option("--budget", budget);

  auto* verify_cmd = app.add_subcommand("verify", "Run oracle suites");
  verify_cmd->add_option("suite", suite, "hopf, branching, brute or all")
      ->check(CLI::IsMember({"hopf", "branching", "brute", "all"}));
  verify_cmd->add_option("--budget", budget);
  verify_cmd->add_option("--seed", seed);
  add_format(verify_cmd, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  const brute::Options options{budget, &token};
  try {
    if (*socle) {
      auto report = socle_layers(parse_partition("--lambda", lambda_text), parse_partition("--mu", mu_text));
      if (format == Format::json)
        print_json(io::to_json(report));
      else
        std::cout << io::render(report);
    } else if (*length) {
      std::cout << tensor_length(m, n).get_str() << "\n";
    } else if (*simple_length) {
      std::cout << mackey::simple_length(parse_partition("--lambda", lambda_text), parse_partition("--mu", mu_text))
                       .get_str()
                << "\n";
    } else if (*lr) {
      std::cout << lr_coefficient(parse_partition("lambda", lambda_text), parse_partition("mu", mu_text),
                                  parse_partition("nu", nu_text))
                       .get_str()
                << "\n";
    } else if (*coproduct_cmd) {
      auto f = coproduct(parse_partition("lambda", lambda_text));
      if (format == Format::json)
        print_json(io::to_json(f));
      else
        std::cout << io::render(f) << "\n";
    } else if (*product) {
      auto f = schur_product(parse_partition("mu", mu_text), parse_partition("nu", nu_text));
      if (format == Format::json)
        print_json(io::to_json(f));
      else
        std::cout << io::render(f) << "\n";
    } else if (*dim) {
      MixedWeight w{parse_partition("--lambda", lambda_text), parse_partition("--mu", mu_text), rank};
      std::cout << dim_mixed(w).get_str() << "\n";
    } else if (*words) {
      for (const auto& word : filtration_words(m, k)) {
        for (auto bit : word) std::cout << static_cast<int>(bit);
        std::cout << "\n";
      }
    } else if (*mixed) {
      auto parts = decompose_mixed_tensor(m, n);
      if (format == Format::json) {
        io::Json out = io::Json::array();
        for (const auto& c : parts)
          out.push_back(io::Json{{"beta", io::to_json(c.beta)},
                                 {"gamma", io::to_json(c.gamma)},
                                 {"mult", io::to_json(c.multiplicity)}});
        print_json(out);
      } else {
        for (const auto& c : parts)
          std::cout << c.multiplicity.get_str() << "*V_(" << c.beta.to_string() << ";" << c.gamma.to_string()
                    << ")\n";
      }
    } else if (*filtration) {
      const Partition lambda = parse_partition("--lambda", lambda_text);
      const auto data = brute::parabolic(rank, block);
      auto tensor = brute::build_tensor_module(rank, lambda.size(), 0, options);
      auto module = brute::restrict_to(tensor, brute::young_project(tensor, lambda, Partition{}, options), &token);
      auto layers = brute::layer_dimensions(brute::socle_filtration_parabolic(module, data, options));
      std::vector<std::string> predicted;
      for (int degree = 0; degree <= lambda.size(); ++degree) {
        Integer total = 0;
        const TensorSchurExpr component = homogeneous_component(coproduct(lambda), degree, Side::left);
        for (const auto& [key, c] : component.terms())
          total += c * dim_schur(key.first, rank - block) * dim_schur(key.second, block);
        predicted.push_back(total.get_str());
      }
      if (format == Format::json) {
        print_json(io::Json{{"rank", rank}, {"block", block}, {"lambda", io::to_json(lambda)},
                            {"layers", layers}, {"predicted", predicted}});
      } else {
        std::cout << "layer dimensions:";
        for (auto d : layers) std::cout << " " << d;
        std::cout << "\npredicted:";
        for (const auto& d : predicted) std::cout << " " << d;
        std::cout << "\n";
      }
    } else if (*dump) {
      auto module = brute::build_tensor_module(rank, m, n, options);
      io::write_module(std::cout, module);
      if (block > 0) io::write_filtration(std::cout, brute::socle_filtration_parabolic(module, brute::parabolic(rank, block), options));
    } else if (*verify_cmd) {
      verify::Settings settings{seed, budget, &token};
      auto results = verify::run_suite(suite, settings);
      bool all_passed = true;
      io::Json out = io::Json::array();
      for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        if (format == Format::json)
          out.push_back(io::Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        else
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
      }
      if (format == Format::json) print_json(out);
      return all_passed ? 0 : kVerificationFailed;
    }
  } catch (const Cancelled&) {
    std::cerr << "interrupted\n";
    return kInterrupted;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const brute::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --budget or SOCLE_BUDGET)\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
