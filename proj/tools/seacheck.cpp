// Command-line front end. Every verb maps 1:1 onto a library call; the
// CLI only parses arguments and renders reports.
//
// Exit codes: 0 = computed (whatever the mathematical outcome),
//             1 = --expect-clean was asserted and violations were found,
//             2 = usage or input error.

#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seacheck/e0.hpp"
#include "seacheck/e0_instance.hpp"
#include "seacheck/instances.hpp"
#include "seacheck/mutation.hpp"
#include "seacheck/order.hpp"
#include "seacheck/parse.hpp"
#include "seacheck/verify.hpp"

namespace {

using namespace seacheck;

struct Options {
  int n_max = 4;
  int k_max = 3;
  int denominator = 6;
  unsigned threads = 1;
  std::string format = "text";
  std::string instance = "e0";
  std::string mutate;
  bool expect_clean = false;
  bool sharp_only = false;
  int max_subset_size = 3;
  std::string chain;
  std::string verb_arg;            // verify family / op name / order relation
  std::vector<std::string> args;   // element literals
};

void emit(const std::string& format, const nlohmann::json& json,
          const std::string& text) {
  if (format == "json") {
    std::cout << json.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string list_text(const std::vector<Element>& elements) {
  std::string out;
  for (const Element& e : elements) out += to_string(e) + "\n";
  return out;
}

nlohmann::json list_json(const std::vector<Element>& elements) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Element& e : elements) arr.push_back(to_string(e));
  return arr;
}

int run_elements(const Options& opt) {
  Fragment fragment(opt.n_max, opt.k_max);
  nlohmann::json json = {
      {"fragment", "e0[n=" + std::to_string(opt.n_max) +
                       ",k=" + std::to_string(opt.k_max) + "]"},
      {"count", fragment.carrier().size()},
      {"elements", list_json(fragment.carrier())}};
  emit(opt.format, json, list_text(fragment.carrier()));
  return 0;
}

int run_op(const Options& opt) {
  const std::string& name = opt.verb_arg;
  if (name == "orthosupplement") {
    if (opt.args.size() != 1) {
      throw std::invalid_argument("op orthosupplement takes one element");
    }
    Element result = orthosupplement(parse_element(opt.args[0]));
    emit(opt.format, {{"result", to_string(result)}}, to_string(result) + "\n");
    return 0;
  }
  if (opt.args.size() != 2) {
    throw std::invalid_argument("op " + name + " takes two elements");
  }
  Element x = parse_element(opt.args[0]);
  Element y = parse_element(opt.args[1]);
  if (name == "oplus") {
    auto result = oplus(x, y);
    std::string text =
        result ? to_string(*result) : std::string(undefined_text);
    emit(opt.format,
         {{"result", result ? nlohmann::json(to_string(*result))
                            : nlohmann::json(nullptr)}},
         text + "\n");
    return 0;
  }
  // circ
  Element result = circ(x, y);
  emit(opt.format, {{"result", to_string(result)}}, to_string(result) + "\n");
  return 0;
}

int run_verify(const Options& opt) {
  VerifyOptions vopts;
  vopts.threads = opt.threads;
  const bool sea = opt.verb_arg == "sea";

  VerifyReport report;
  if (opt.instance == "e0") {
    std::optional<MutationSpec> mutation;
    if (!opt.mutate.empty()) mutation = mutation_for_rule(opt.mutate);
    E0Instance inst(Fragment(opt.n_max, opt.k_max), mutation);
    report = sea ? run_sea(inst, vopts) : run_ea(inst, vopts);
  } else if (opt.instance == "boolean") {
    if (!opt.mutate.empty()) {
      throw std::invalid_argument("--mutate applies to the e0 instance only");
    }
    BooleanInstance inst(opt.k_max);
    report = sea ? run_sea(inst, vopts) : run_ea(inst, vopts);
  } else {
    if (!opt.mutate.empty()) {
      throw std::invalid_argument("--mutate applies to the e0 instance only");
    }
    IntervalInstance inst(opt.denominator);
    report = sea ? run_sea(inst, vopts) : run_ea(inst, vopts);
  }

  emit(opt.format, report.to_json(), report.to_text());
  if (opt.expect_clean && !report.violations.empty()) return 1;
  return 0;
}

int run_order(const Options& opt) {
  Fragment fragment(opt.n_max, opt.k_max);
  const std::string& relation = opt.verb_arg;

  if (relation == "leq") {
    if (opt.args.size() != 2) {
      throw std::invalid_argument("order leq takes two elements");
    }
    LeqResult result =
        leq(parse_element(opt.args[0]), parse_element(opt.args[1]));
    nlohmann::json json = {
        {"leq", result.holds},
        {"witness", result.witness ? nlohmann::json(to_string(*result.witness))
                                   : nlohmann::json(nullptr)}};
    std::string text = result.holds
                           ? "true witness=" + to_string(*result.witness) + "\n"
                           : "false\n";
    emit(opt.format, json, text);
    return 0;
  }
  if (relation == "upper-bounds" || relation == "lower-bounds") {
    if (opt.args.size() != 1) {
      throw std::invalid_argument("order " + relation + " takes one element");
    }
    Element x = parse_element(opt.args[0]);
    std::vector<Element> bounds = relation == "upper-bounds"
                                      ? upper_bounds(x, fragment, opt.sharp_only)
                                      : lower_bounds(x, fragment);
    emit(opt.format, {{"elements", list_json(bounds)}}, list_text(bounds));
    return 0;
  }
  // meet / join
  if (opt.args.empty()) {
    throw std::invalid_argument("order " + relation +
                                " takes at least one element");
  }
  std::vector<Element> subject;
  for (const std::string& arg : opt.args) subject.push_back(parse_element(arg));
  if (relation == "meet") {
    MeetReport report = meet_in_fragment(subject, fragment);
    emit(opt.format, report.to_json(), report.to_text());
  } else {
    JoinReport report = join_in_fragment(subject, fragment);
    emit(opt.format, report.to_json(), report.to_text());
  }
  return 0;
}

int run_dominate(const Options& opt) {
  Fragment fragment(opt.n_max, opt.k_max);
  if (opt.args.size() != 1) {
    throw std::invalid_argument("dominate takes one target element");
  }
  DominatorCertificate cert =
      refute_least_sharp_dominator(parse_element(opt.args[0]), fragment);
  emit(opt.format, cert.to_json(), cert.to_text());
  return 0;
}

int run_chain_meet(const Options& opt) {
  Fragment fragment(opt.n_max, opt.k_max);
  ChainMeetReport report = chain_meet_analysis(parse_chain(opt.chain), fragment);
  emit(opt.format, report.to_json(), report.to_text());
  return 0;
}

int run_sharp_closure(const Options& opt) {
  Fragment fragment(opt.n_max, opt.k_max);
  SharpClosureReport report = check_sharp_closure(fragment, opt.max_subset_size);
  emit(opt.format, report.to_json(), report.to_text());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "seacheck: exhaustive axiom checking and order analysis for effect "
      "algebras, on finite fragments of the counterexample algebra e0 and "
      "on reference instances"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--n-max", opt.n_max, "Fragment subscript bound")
      ->capture_default_str();
  app.add_option("--k-max", opt.k_max,
                 "Fragment ground-set bound (also the Boolean ground size)")
      ->capture_default_str();
  app.add_option("--denominator", opt.denominator,
                 "Grid denominator for the interval instance")
      ->capture_default_str();
  app.add_option("--threads", opt.threads, "Verifier worker count")
      ->capture_default_str();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* elements =
      app.add_subcommand("elements", "List the fragment carrier");

  CLI::App* op = app.add_subcommand("op", "Evaluate one operation");
  op->add_option("operation", opt.verb_arg, "oplus | circ | orthosupplement")
      ->required()
      ->check(CLI::IsMember({"oplus", "circ", "orthosupplement"}));
  op->add_option("elements", opt.args, "Operand element literals");

  CLI::App* verify =
      app.add_subcommand("verify", "Run the axiom checker on an instance");
  verify->add_option("family", opt.verb_arg, "ea | sea")
      ->required()
      ->check(CLI::IsMember({"ea", "sea"}));
  verify->add_option("--instance", opt.instance, "Instance to check")
      ->check(CLI::IsMember({"e0", "boolean", "interval"}))
      ->capture_default_str();
  verify->add_option("--mutate", opt.mutate,
                     "Apply the shipped mutation fixture for this rule id");
  verify->add_flag("--expect-clean", opt.expect_clean,
                   "Exit 1 if any violation is reported");

  CLI::App* order = app.add_subcommand("order", "Order queries on a fragment");
  order
      ->add_option("relation", opt.verb_arg,
                   "leq | upper-bounds | lower-bounds | meet | join")
      ->required()
      ->check(CLI::IsMember(
          {"leq", "upper-bounds", "lower-bounds", "meet", "join"}));
  order->add_option("elements", opt.args, "Element literals");
  order->add_flag("--sharp-only", opt.sharp_only,
                  "Restrict upper-bounds to sharp elements");

  CLI::App* dominate = app.add_subcommand(
      "dominate", "Search for a least sharp upper bound of the target");
  dominate->add_option("elements", opt.args, "Target element literal");

  CLI::App* chain_meet = app.add_subcommand(
      "chain-meet", "Prefix meets of a strictly decreasing d-chain");
  chain_meet
      ->add_option("--chain", opt.chain,
                   "Semicolon-separated ground sets, e.g. \"{1};{1,2}\"")
      ->required();

  CLI::App* sharp_closure = app.add_subcommand(
      "sharp-closure", "Meets/joins of sharp subsets stay sharp");
  sharp_closure
      ->add_option("--max-subset-size", opt.max_subset_size,
                   "Largest subset of sharp elements to scan")
      ->capture_default_str();

  for (CLI::App* sub :
       {elements, op, verify, order, dominate, chain_meet, sharp_closure}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(elements)) return run_elements(opt);
    if (app.got_subcommand(op)) return run_op(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(order)) return run_order(opt);
    if (app.got_subcommand(dominate)) return run_dominate(opt);
    if (app.got_subcommand(chain_meet)) return run_chain_meet(opt);
    if (app.got_subcommand(sharp_closure)) return run_sharp_closure(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
