// cubedom CLI: build, verify and measure dominating structures in Q_n.
//
// Exit codes: 0 success / verified, 1 verification failure, unproven result
// or build failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubedom/cubedom.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

std::string opt_text(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "-";
}

std::string six_digits(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

struct CodeOptions {
  int parity_bits = 0;
  bool list = false;
};

int cmd_code(const CodeOptions& opt) {
  const auto code = cubedom::build_hamming(opt.parity_bits);
  std::cout << "k=" << code.parity_bits << "\n"
            << "N=" << code.block_length << "\n"
            << "message_bits=" << code.message_bits() << "\n"
            << "codeword_count=" << code.codeword_count() << "\n";
  if (opt.list) {
    const auto words = cubedom::codewords(code);  // needs N within the explicit cap
    words.for_each([&](cubedom::Vertex v) {
      std::cout << cubedom::format_vertex(v, code.block_length) << "\n";
    });
  }
  return kExitOk;
}

struct ConstructOptions {
  int n = 0;
  std::string method;
  std::optional<int> parity_bits;
  std::optional<int> layer_bits;
  std::string out_set;
  std::string out_tree;
  bool json = false;
};

int cmd_construct(const ConstructOptions& opt) {
  cubedom::ConstructionReport report;
  if (opt.method == "hamming") {
    if (opt.layer_bits) return usage_error("--j does not apply to --method hamming");
    const int p = cubedom::largest_code_parity_bits(opt.n);
    if ((1 << p) - 1 != opt.n)
      return usage_error("--method hamming needs n of the form 2^k-1, got " +
                         std::to_string(opt.n));
    if (opt.parity_bits && *opt.parity_bits != p)
      return usage_error("--k " + std::to_string(*opt.parity_bits) +
                         " inconsistent with --n " + std::to_string(opt.n));
    report = cubedom::construct_hamming_direct(p);
  } else if (opt.method == "doubling") {
    if (opt.layer_bits) return usage_error("--j does not apply to --method doubling");
    report = cubedom::construct_doubling(opt.n, opt.parity_bits);
  } else if (opt.method == "expansion") {
    if (!opt.layer_bits) return usage_error("--method expansion needs --j");
    report = cubedom::construct_expansion(opt.n, *opt.layer_bits, opt.parity_bits);
  } else {  // auto
    if (opt.parity_bits || opt.layer_bits)
      return usage_error("--k/--j do not apply to --method auto");
    report = cubedom::auto_construct(opt.n);
  }

  std::cout << "n=" << report.n << "\n"
            << "method=" << report.method << "\n"
            << "N=" << opt_text(report.base_dimension) << "\n"
            << "j=" << opt_text(report.layer_bits) << "\n"
            << "k=" << opt_text(report.parity_bits) << "\n"
            << "ds_size=" << report.ds_size << "\n"
            << "cds_size=" << report.cds_size << "\n"
            << "bound_value=" << report.bound_value << "\n"
            << "leaf_count=" << report.leaf_count << "\n"
            << "gamma_lower=" << report.gamma_lower << "\n"
            << "gamma_c_lower=" << report.gamma_c_lower << "\n"
            << "ratio_gamma_c=" << six_digits(report.ratio_gamma_c) << "\n"
            << "explicit=" << (report.explicit_build ? "true" : "false") << "\n";

  if ((!opt.out_set.empty() || !opt.out_tree.empty()) && !report.explicit_build) {
    std::cerr << "error: n=" << report.n
              << " is above the explicit-set cap, nothing to write\n";
    return kExitFailure;
  }
  if (!opt.out_set.empty()) {
    std::ofstream out(opt.out_set);
    if (!out) {
      std::cerr << "error: cannot open " << opt.out_set << "\n";
      return kExitFailure;
    }
    cubedom::write_set_file(out, *report.backbone);
    std::cout << "set_file=" << opt.out_set << "\n";
  }
  if (!opt.out_tree.empty()) {
    std::ofstream out(opt.out_tree);
    if (!out) {
      std::cerr << "error: cannot open " << opt.out_tree << "\n";
      return kExitFailure;
    }
    cubedom::write_tree_file(out, cubedom::tree_from_cds(*report.backbone));
    std::cout << "tree_file=" << opt.out_tree << "\n";
  }

  if (opt.json) {
    nlohmann::json j{{"n", report.n},
                     {"method", report.method},
                     {"ds_size", report.ds_size},
                     {"cds_size", report.cds_size},
                     {"bound_value", report.bound_value},
                     {"leaf_count", report.leaf_count},
                     {"gamma_lower", report.gamma_lower},
                     {"gamma_c_lower", report.gamma_c_lower},
                     {"ratio_gamma_c", report.ratio_gamma_c},
                     {"explicit", report.explicit_build}};
    if (report.base_dimension) j["N"] = *report.base_dimension;
    if (report.layer_bits) j["j"] = *report.layer_bits;
    if (report.parity_bits) j["k"] = *report.parity_bits;
    std::cout << j.dump() << "\n";
  }
  return kExitOk;
}

struct ExactOptions {
  std::string parameter;
  int n = 0;
  std::uint64_t budget_nodes = cubedom::SearchBudget{}.max_nodes;
  double budget_secs = cubedom::SearchBudget{}.max_seconds;
  std::string out_witness;
};

int cmd_exact(const ExactOptions& opt) {
  cubedom::SearchBudget budget{opt.budget_nodes, opt.budget_secs};
  const auto result = opt.parameter == "gamma" ? cubedom::exact_gamma(opt.n, budget)
                                               : cubedom::exact_gamma_c(opt.n, budget);
  std::cout << "n=" << result.n << "\n"
            << "parameter=" << result.parameter << "\n"
            << "value=" << result.value << "\n"
            << "status=" << cubedom::to_string(result.status) << "\n"
            << "nodes=" << result.nodes_explored << "\n";
  std::cout << "witness=";
  bool first = true;
  result.witness.for_each([&](cubedom::Vertex v) {
    if (!first) std::cout << ' ';
    std::cout << cubedom::format_vertex(v, result.n);
    first = false;
  });
  std::cout << "\n";
  if (!opt.out_witness.empty()) {
    std::ofstream out(opt.out_witness);
    if (!out) {
      std::cerr << "error: cannot open " << opt.out_witness << "\n";
      return kExitFailure;
    }
    cubedom::write_set_file(out, result.witness);
    std::cout << "witness_file=" << opt.out_witness << "\n";
  }
  return result.status == cubedom::SearchStatus::proven ? kExitOk : kExitFailure;
}

struct VerifySetOptions {
  int n = 0;
  std::string file;
  bool connected = false;
};

int cmd_verify_set(const VerifySetOptions& opt) {
  std::ifstream in(opt.file);
  if (!in) {
    std::cerr << "error: cannot open " << opt.file << "\n";
    return kExitFailure;
  }
  const auto set = cubedom::read_set_file(in, opt.n);
  const bool dominating = cubedom::is_dominating(set);
  bool ok = dominating;
  std::cout << "size=" << set.size() << "\n"
            << "dominating=" << (dominating ? "true" : "false") << "\n";
  if (opt.connected) {
    const bool connected = !set.empty() && cubedom::is_connected(set);
    std::cout << "connected=" << (connected ? "true" : "false") << "\n";
    ok = ok && connected;
  }
  std::cout << "verdict=" << (ok ? "ok" : "failed") << "\n";
  return ok ? kExitOk : kExitFailure;
}

struct VerifyTreeOptions {
  int n = 0;
  std::string file;
};

int cmd_verify_tree(const VerifyTreeOptions& opt) {
  std::ifstream in(opt.file);
  if (!in) {
    std::cerr << "error: cannot open " << opt.file << "\n";
    return kExitFailure;
  }
  const auto tree = cubedom::read_tree_file(in);
  bool ok = true;
  if (tree.n != opt.n) {
    std::cout << "violation: file header n=" << tree.n << " does not match --n "
              << opt.n << "\n";
    ok = false;
  }
  const auto report = cubedom::verify_tree(tree);
  for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
  std::cout << "leaf_count=" << report.recomputed_leaf_count << "\n"
            << "verdict=" << (ok && report.valid ? "ok" : "failed") << "\n";
  return ok && report.valid ? kExitOk : kExitFailure;
}

struct TableOptions {
  int min_n = 0;
  int max_n = 0;
  std::string format = "csv";
  bool allow_formula_rows = false;
};

int cmd_table(const TableOptions& opt) {
  const auto format = opt.format == "tsv"        ? cubedom::TableFormat::tsv
                      : opt.format == "markdown" ? cubedom::TableFormat::markdown
                                                 : cubedom::TableFormat::csv;
  std::vector<cubedom::TableRow> rows;
  try {
    rows = cubedom::build_table(opt.min_n, opt.max_n, opt.allow_formula_rows);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());  // range preconditions are flag misuse
  }
  std::cout << cubedom::format_table(rows, format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("CUBEDOM_NMAX")) {
    try {
      std::size_t used = 0;
      const int cap = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("junk");
      cubedom::set_max_explicit_dimension(cap);
    } catch (const std::exception&) {
      return usage_error("CUBEDOM_NMAX must be an integer in [1, " +
                         std::to_string(cubedom::kDimensionHardCap) + "]");
    }
  }

  CLI::App app{"dominating sets, connected dominating sets and leafy spanning trees in hypercubes"};
  app.require_subcommand(1);

  CodeOptions code_opt;
  auto* code = app.add_subcommand("code", "Hamming code parameters and codewords");
  code->add_option("--k", code_opt.parity_bits, "parity bits (1..5)")
      ->required()
      ->check(CLI::Range(1, 5));
  code->add_flag("--list", code_opt.list, "print the codewords, one per line");

  ConstructOptions cons_opt;
  auto* cons = app.add_subcommand("construct", "build a connected dominating set");
  cons->add_option("--n", cons_opt.n, "cube dimension")->required()->check(CLI::Range(2, 62));
  cons->add_option("--method", cons_opt.method, "hamming|doubling|expansion|auto")
      ->required()
      ->check(CLI::IsMember({"hamming", "doubling", "expansion", "auto"}));
  cons->add_option("--k", cons_opt.parity_bits, "Hamming parity bits of the base code");
  cons->add_option("--j", cons_opt.layer_bits, "expansion layer bits");
  cons->add_option("--out-set", cons_opt.out_set, "write the set, one vertex per line");
  cons->add_option("--out-tree", cons_opt.out_tree, "write the spanning tree it carries");
  cons->add_flag("--json", cons_opt.json, "also print the report as one JSON record");

  ExactOptions exact_opt;
  auto* exact = app.add_subcommand("exact", "exact branch-and-bound values for small n");
  exact->add_option("parameter", exact_opt.parameter, "gamma|gamma-c")
      ->required()
      ->check(CLI::IsMember({"gamma", "gamma-c"}));
  exact->add_option("--n", exact_opt.n, "cube dimension")->required()->check(CLI::Range(1, 24));
  exact->add_option("--budget-nodes", exact_opt.budget_nodes, "search node budget");
  exact->add_option("--budget-secs", exact_opt.budget_secs, "wall-clock budget in seconds");
  exact->add_option("--out-witness", exact_opt.out_witness, "write the witness set file");

  auto* verify = app.add_subcommand("verify", "check a set or tree file");
  verify->require_subcommand(1);
  VerifySetOptions vset_opt;
  auto* vset = verify->add_subcommand("set", "check a dominating set file");
  vset->add_option("--n", vset_opt.n, "cube dimension")->required()->check(CLI::Range(1, 30));
  vset->add_option("--file", vset_opt.file, "set file, one vertex per line")->required();
  vset->add_flag("--connected", vset_opt.connected, "also require connectivity");
  VerifyTreeOptions vtree_opt;
  auto* vtree = verify->add_subcommand("tree", "check a spanning tree file");
  vtree->add_option("--n", vtree_opt.n, "cube dimension")->required()->check(CLI::Range(1, 30));
  vtree->add_option("--file", vtree_opt.file, "tree file")->required();

  TableOptions table_opt;
  auto* table = app.add_subcommand("table", "per-dimension construction summary");
  table->add_option("--min-n", table_opt.min_n, "first dimension")->required();
  table->add_option("--max-n", table_opt.max_n, "last dimension")->required();
  table->add_option("--format", table_opt.format, "csv|tsv|markdown (default csv)")
      ->check(CLI::IsMember({"csv", "tsv", "markdown"}));
  table->add_flag("--allow-formula-rows", table_opt.allow_formula_rows,
                  "permit rows above the explicit-set cap (formula bounds only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*code) return cmd_code(code_opt);
    if (*cons) return cmd_construct(cons_opt);
    if (*exact) return cmd_exact(exact_opt);
    if (*vset) return cmd_verify_set(vset_opt);
    if (*vtree) return cmd_verify_tree(vtree_opt);
    if (*table) return cmd_table(table_opt);
  } catch (const cubedom::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const cubedom::ExplicitSetTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
