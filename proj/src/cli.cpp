#include "fsrel/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fsrel/error.hpp"
#include "fsrel/json_io.hpp"

namespace fsrel {

namespace {

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::uint32_t candidate_degree(const Candidate &c) { return std::max(c.h.max_degree(), c.k.max_degree()); }

void emit_error(std::ostream &err, const std::string &message) {
  err << Json{{"error", message}}.dump() << '\n';
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Decide whether two complex space forms are relatives, with certificates."};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  std::string form1, form2;
  auto *decide = app.add_subcommand("decide", "Classify a pair of space forms");
  decide->add_option("--form1", form1, "First form, e.g. \"FS(3, 1)\"")->required();
  decide->add_option("--form2", form2, "Second form, e.g. \"CP(5, 1, 2)\"")->required();

  std::uint32_t n = 0, r = 0;
  std::string b_text;
  auto *expand = app.add_subcommand("expand", "Expand (1 + b|Z|^2)^r into squared monomials");
  expand->add_option("--n", n, "Number of variables")->required();
  expand->add_option("--b", b_text, "Curvature p/q")->required();
  expand->add_option("--r", r, "Power")->required();

  std::string input;
  auto *reduce = app.add_subcommand("reduce", "Signature-reduce a Hermitian series");
  reduce->add_option("--input", input, "HermitianSeries JSON file")->required();

  std::uint32_t rank_degree = 1;
  auto *rank = app.add_subcommand("rank", "Taylor-matrix rank of a germ list");
  rank->add_option("--input", input, "Germ list JSON file")->required();
  rank->add_option("--degree", rank_degree, "Truncation degree")->required();

  SearchOptions opts;
  std::uint32_t degree = 2, cap = 0;
  auto *search = app.add_subcommand("search", "Numeric least-squares search for a witness curve pair");
  search->add_option("--form1", form1, "F(n, b)")->required();
  search->add_option("--form2", form2, "F(m, a)")->required();
  search->add_option("--degree", degree, "Curve truncation degree")->capture_default_str();
  search->add_option("--restarts", opts.restarts, "Number of restarts")->capture_default_str();
  search->add_option("--seed", opts.seed, "Seed")->capture_default_str();
  search->add_option("--tol", opts.tol, "Convergence tolerance on the residual")->capture_default_str();
  search->add_option("--max-iters", opts.max_iters, "Iterations per restart")->capture_default_str();
  search->add_option("--threads", opts.threads, "Worker threads")->capture_default_str();
  search->add_option("--cap", cap, "Bicoefficient cap (0: 2*degree*max(s,r))")->capture_default_str();

  std::string witness;
  auto *verify = app.add_subcommand("verify", "Exactly verify a witness curve pair");
  verify->add_option("--form1", form1, "F(n, b)")->required();
  verify->add_option("--form2", form2, "F(m, a)")->required();
  verify->add_option("--witness", witness, "Candidate JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    emit_error(err, e.what());
    return exit_validation;
  }

  try {
    Json result;
    if (decide->parsed()) {
      const SpaceForm f1 = parse_form(form1), f2 = parse_form(form2);
      result = {{"form1", to_json(f1)}, {"form2", to_json(f2)}};
      const Json verdict = to_json(decide_relatives(f1, f2));
      for (const auto &[k, v] : verdict.items())
        result[k] = v;
    } else if (expand->parsed()) {
      const DiagonalExpansion e = expand_fubini_power(n, parse_rational(b_text), r);
      result = to_json(e);
      result["embedding_dimension"] = embedding_dimension(n, r).get_si();
    } else if (reduce->parsed()) {
      const HermitianSeries h = hermitian_from_json(read_json_file(input));
      const SignedGermSystem sys = signature_reduce(h);
      result = {{"inertia", to_json(inertia(h))},
                {"system", to_json(sys)},
                {"reconstructs", norm_square_system(sys) == h}};
    } else if (rank->parsed()) {
      const std::vector<TruncatedGerm> germs = germ_list_from_json(read_json_file(input));
      const TaylorRank tr = taylor_matrix_rank(germs, rank_degree);
      result = {{"germs", germs.size()}, {"degree", rank_degree}, {"rank", tr.rank}, {"independent", tr.independent}};
    } else if (search->parsed()) {
      const SearchProblem p = make_search_problem(parse_form(form1), parse_form(form2), degree, cap);
      result = search_report(p, search_isometry(p, opts));
    } else if (verify->parsed()) {
      const Candidate c = candidate_from_json(read_json_file(witness));
      const SearchProblem p = make_search_problem(parse_form(form1), parse_form(form2), candidate_degree(c));
      const WitnessCheck check = verify_witness_exact(c, p);
      result = {{"problem", to_json(p)}};
      const Json check_json = to_json(check);
      for (const auto &[k, v] : check_json.items())
        result[k] = v;
      result["residual"] = rational_to_json(residual(c, p).real_rational());
    }
    out << (pretty ? result.dump(2) : result.dump()) << '\n';
    return exit_ok;
  } catch (const Error &e) {
    emit_error(err, e.what());
    return exit_validation;
  } catch (const nlohmann::json::exception &e) {
    emit_error(err, std::string("malformed JSON input: ") + e.what());
    return exit_validation;
  } catch (const InternalAssertion &e) {
    emit_error(err, std::string("internal assertion failed: ") + e.what());
    return exit_internal;
  } catch (const std::exception &e) {
    emit_error(err, std::string("internal error: ") + e.what());
    return exit_internal;
  }
}

} // namespace fsrel
