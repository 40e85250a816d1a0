// Copyright 2026 The cbcchaos Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <random>

#include "CLI11.hpp"

#include "cbcchaos/cbc.hpp"
#include "cbcchaos/chaos.hpp"
#include "cbcchaos/serialize.hpp"

namespace cbcchaos::cli {

namespace {

constexpr unsigned kAutoExplicitMaxBits = 10;

struct CommonOptions {
  unsigned n = 0;
  std::string cipher = "identity";
  std::string semantics = "bit-index";
  bool allow_large_n = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--n", opts.n, "Block size in bits")->required();
  cmd->add_option("--cipher", opts.cipher,
                  "identity | negation | caesar:<k> | table:<path>")
      ->capture_default_str();
  cmd->add_option("--semantics", opts.semantics, "bit-index | full-block | xor")
      ->capture_default_str();
  cmd->add_flag("--allow-large-n", opts.allow_large_n,
                std::string("Honour ") + kMaxBitsEnv + " above the default maximum");
}

unsigned max_bits(const CommonOptions& opts, std::ostream& err) {
  const char* env = std::getenv(kMaxBitsEnv);
  if (!env) return kDefaultMaxBits;
  if (!opts.allow_large_n) {
    err << "warning: " << kMaxBitsEnv << " ignored without --allow-large-n\n";
    return kDefaultMaxBits;
  }
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) {
    throw Error(std::string(kMaxBitsEnv) + " must be a positive integer");
  }
  return static_cast<unsigned>(std::min<unsigned long>(v, kHardMaxBits));
}

TransitionGraph build_graph(const CommonOptions& opts, std::ostream& err) {
  const MessageSemantics sem = parse_semantics(opts.semantics);
  const BlockSize size(opts.n, max_bits(opts, err));
  return TransitionGraph(parse_cipher_spec(opts.cipher, size), sem);
}

MessageSeq parse_message(const std::string& text, const TransitionGraph& g) {
  return MessageSeq(parse_label_list(text, g.label_count() - 1));
}

Block parse_block(const std::string& text, BlockSize size) {
  const auto values = parse_label_list(text, size.mask());
  if (values.size() != 1) throw Error("expected a single block value, got '" + text + "'");
  return Block(values.front(), size);
}

std::string join(const std::vector<std::uint32_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

std::vector<std::uint32_t> values_of(const std::vector<Block>& blocks) {
  std::vector<std::uint32_t> v;
  v.reserve(blocks.size());
  for (const Block& b : blocks) v.push_back(b.value());
  return v;
}

// ---- analyze ----

struct AnalyzeOptions {
  CommonOptions common;
  std::string mode = "auto";
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const TransitionGraph g = build_graph(o.common, err);
  ConnectivityMode mode;
  if (o.mode == "auto") {
    mode = g.size().bits() <= kAutoExplicitMaxBits ? ConnectivityMode::kExplicit
                                                   : ConnectivityMode::kImplicit;
  } else {
    mode = parse_connectivity_mode(o.mode);
  }
  const ChaosVerdict verdict = chaos_verdict(g, mode);
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  out << verdict_json(verdict, elapsed).dump(2) << '\n';
  return kExitOk;
}

// ---- graph ----

struct GraphOptions {
  CommonOptions common;
  std::string format = "dot";
};

int cmd_graph(const GraphOptions& o, std::ostream& out, std::ostream& err) {
  const TransitionGraph g = build_graph(o.common, err);
  if (o.format == "dot") {
    out << export_dot(g);
  } else if (o.format == "csv") {
    out << edge_table_csv(g);
  } else {
    throw Error("graph output format must be dot or csv");
  }
  return kExitOk;
}

// ---- simulate ----

struct SimulateOptions {
  CommonOptions common;
  std::string iv = "0";
  std::string message;
  std::optional<std::size_t> steps;
  std::string format = "text";
};

int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
  const TransitionGraph g = build_graph(o.common, err);
  const Block iv = parse_block(o.iv, g.size());
  const MessageSeq message = parse_message(o.message, g);
  const std::size_t steps = o.steps.value_or(message.size());
  const Trajectory t =
      trajectory(g.cipher(), PhasePoint{iv, message}, steps, g.semantics());

  if (o.format == "json") {
    Json j;
    j["n"] = g.size().bits();
    j["cipher"] = g.cipher().descriptor();
    j["semantics"] = std::string(to_string(g.semantics()));
    Json states = Json::array();
    for (const PhasePoint& p : t.points) states.push_back(p.state.value());
    j["states"] = states;
    j["ciphertext"] = Json(values_of(t.ciphertext_blocks));
    j["tail_labels_consumed"] = t.tail_labels_consumed;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (o.format != "text") throw Error("simulate output format must be text or json");
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    const Block& s = t.points[i].state;
    out << "X^" << i << " state=" << s.value() << " (" << s.to_binary() << ")";
    if (i > 0) out << " label=" << message.at(i - 1);
    out << '\n';
  }
  out << "ciphertext=" << join(values_of(t.ciphertext_blocks)) << '\n';
  if (t.consumed_tail()) {
    err << "note: " << t.tail_labels_consumed
        << " iterate(s) read zero labels past the message prefix\n";
  }
  return kExitOk;
}

// ---- cbc ----

struct CbcOptions {
  CommonOptions common;
  std::string action;
  std::string iv = "0";
  std::optional<std::string> input;
  std::optional<std::string> blocks;
  bool pad = true;
  std::string format = "text";
};

int cmd_cbc(const CbcOptions& o, std::ostream& out, std::ostream& err) {
  const TransitionGraph g = build_graph(o.common, err);
  const BlockSize size = g.size();
  const Block iv = parse_block(o.iv, size);
  if (o.input.has_value() == o.blocks.has_value()) {
    throw Error("give exactly one of --input (bits) or --blocks (decimal list)");
  }

  std::vector<Block> result;
  BitString result_bits;
  if (o.action == "encrypt") {
    std::vector<Block> plain;
    if (o.input) {
      const BitString bits = parse_bitstring(*o.input);
      plain = o.pad ? pad(bits, size) : bits_to_blocks(bits, size);
    } else {
      plain = to_blocks(parse_label_list(*o.blocks, size.mask()), size);
      if (o.pad) plain = pad(blocks_to_bits(plain), size);
    }
    result = cbc_encrypt(g.cipher(), iv, plain);
    result_bits = blocks_to_bits(result);
  } else if (o.action == "decrypt") {
    const std::vector<Block> cipher_blocks =
        o.input ? bits_to_blocks(parse_bitstring(*o.input), size)
                : to_blocks(parse_label_list(*o.blocks, size.mask()), size);
    result = cbc_decrypt(g.cipher(), iv, cipher_blocks);
    result_bits = o.pad ? unpad(result) : blocks_to_bits(result);
  } else {
    throw Error("cbc action must be encrypt or decrypt");
  }

  if (o.format == "json") {
    Json j;
    j["action"] = o.action;
    j["n"] = size.bits();
    j["cipher"] = g.cipher().descriptor();
    j["iv"] = iv.value();
    j["padded"] = o.pad;
    j["blocks"] = Json(values_of(result));
    j["bits"] = result_bits;
    out << j.dump(2) << '\n';
  } else if (o.format == "text") {
    out << "blocks=" << join(values_of(result)) << '\n';
    out << "bits=" << result_bits << '\n';
  } else {
    throw Error("cbc output format must be text or json");
  }
  return kExitOk;
}

// ---- witness ----

struct WitnessOptions {
  CommonOptions common;
  std::string kind;
  unsigned q = 1;
  std::optional<std::string> epsilon;
  std::optional<std::string> state, message, to_state, to_message;
  std::uint64_t seed = 0;
};

PhasePoint endpoint(const std::optional<std::string>& state,
                    const std::optional<std::string>& message,
                    const TransitionGraph& g, unsigned q, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick_state(0, g.size().mask());
  std::uniform_int_distribution<std::uint64_t> pick_label(0, g.label_count() - 1);
  const Block s = state ? parse_block(*state, g.size()) : Block(pick_state(rng), g.size());
  if (message) return PhasePoint{s, parse_message(*message, g)};
  std::vector<std::uint32_t> labels(q + 3);
  for (auto& l : labels) l = static_cast<std::uint32_t>(pick_label(rng));
  return PhasePoint{s, MessageSeq(std::move(labels))};
}

int cmd_witness(const WitnessOptions& o, std::ostream& out, std::ostream& err) {
  const TransitionGraph g = build_graph(o.common, err);
  unsigned q = o.q;
  if (o.epsilon) {
    q = epsilon_exponent(*o.epsilon);
    err << "epsilon " << *o.epsilon << " rounded down to 1e-" << q << '\n';
  }
  std::mt19937_64 rng(o.seed);
  const Configuration config = configuration_of(g);
  const PhasePoint from = endpoint(o.state, o.message, g, q, rng);

  try {
    if (o.kind == "periodic") {
      const PeriodicWitness w = make_periodic_point(g, from, q);
      out << witness_json(config, ChaosStatus::kChaotic, w).dump(2) << '\n';
    } else if (o.kind == "transitive") {
      const PhasePoint to = endpoint(o.to_state, o.to_message, g, q, rng);
      const TransitiveWitness w = make_transitive_point(g, from, to, q);
      out << witness_json(config, ChaosStatus::kChaotic, w).dump(2) << '\n';
    } else if (o.kind == "sensitivity") {
      const SensitivityCertificate c = sensitivity_certificate(g, from, q);
      const ChaosStatus status =
          strongly_connected(g, ConnectivityMode::kImplicit).strongly_connected
              ? ChaosStatus::kChaotic
              : ChaosStatus::kNotStronglyConnected;
      out << witness_json(config, status, c).dump(2) << '\n';
    } else {
      throw Error("witness kind must be periodic, transitive or sensitivity");
    }
  } catch (const NotStronglyConnectedError& e) {
    out << failed_witness_json(config, o.kind, e.verdict()).dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitHypothesis;
  }
  return kExitOk;
}

}  // namespace

unsigned epsilon_exponent(const std::string& epsilon) {
  // Parse an unsigned decimal exactly as a rational.
  const auto dot = epsilon.find('.');
  const std::string whole = epsilon.substr(0, dot);
  const std::string frac = dot == std::string::npos ? "" : epsilon.substr(dot + 1);
  if ((whole.empty() && frac.empty()) ||
      whole.find_first_not_of("0123456789") != std::string::npos ||
      frac.find_first_not_of("0123456789") != std::string::npos) {
    throw Error("epsilon must be a positive decimal such as 0.001, got '" + epsilon + "'");
  }
  boost::multiprecision::cpp_int numerator(whole.empty() ? "0" : whole);
  for (char c : frac) numerator = numerator * 10 + (c - '0');
  const Rational value =
      Rational(numerator) * pow10_neg(static_cast<unsigned>(frac.size()));
  if (value <= 0) throw Error("epsilon must be positive");
  unsigned q = 0;
  while (pow10_neg(q) > value) ++q;
  return q;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Devaney-chaos analysis of the CBC mode of operation"};
  app.name("cbcchaos");
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* c_analyze = app.add_subcommand("analyze", "Decide strong connectivity of the transition graph");
  add_common(c_analyze, analyze.common);
  c_analyze->add_option("--mode", analyze.mode, "auto | explicit | implicit")
      ->capture_default_str();

  GraphOptions graph;
  auto* c_graph = app.add_subcommand("graph", "Export the transition graph (n <= 6)");
  add_common(c_graph, graph.common);
  c_graph->add_option("--format", graph.format, "dot | csv")->capture_default_str();

  SimulateOptions sim;
  auto* c_sim = app.add_subcommand("simulate", "Iterate the dynamical system");
  add_common(c_sim, sim.common);
  c_sim->add_option("--iv", sim.iv, "Initial state")->capture_default_str();
  c_sim->add_option("--message", sim.message, "Comma-separated labels");
  c_sim->add_option("--steps", sim.steps, "Iterations (default: message length)");
  c_sim->add_option("--format", sim.format, "text | json")->capture_default_str();

  CbcOptions cbc;
  auto* c_cbc = app.add_subcommand("cbc", "Reference CBC encryption and decryption");
  add_common(c_cbc, cbc.common);
  c_cbc->add_option("action", cbc.action, "encrypt | decrypt")->required();
  c_cbc->add_option("--iv", cbc.iv, "Initialisation vector")->capture_default_str();
  c_cbc->add_option("--input", cbc.input, "Bits as 0/1 or hex:<digits>/<length>");
  c_cbc->add_option("--blocks", cbc.blocks, "Comma-separated decimal blocks");
  c_cbc->add_flag("--pad,!--no-pad", cbc.pad, "Apply 10* padding (default on)");
  c_cbc->add_option("--format", cbc.format, "text | json")->capture_default_str();

  WitnessOptions wit;
  auto* c_wit = app.add_subcommand("witness", "Build a replay-verified chaos witness");
  add_common(c_wit, wit.common);
  c_wit->add_option("kind", wit.kind, "periodic | transitive | sensitivity")->required();
  auto* q_opt = c_wit->add_option("--q", wit.q, "Epsilon exponent: epsilon = 10^-q")
                    ->capture_default_str();
  c_wit->add_option("--epsilon", wit.epsilon, "Decimal epsilon, rounded down to 10^-q")
      ->excludes(q_opt);
  c_wit->add_option("--state", wit.state, "Anchor / origin state (default: random)");
  c_wit->add_option("--message", wit.message, "Anchor / origin labels (default: random)");
  c_wit->add_option("--to-state", wit.to_state, "Transitive target state");
  c_wit->add_option("--to-message", wit.to_message, "Transitive target labels");
  c_wit->add_option("--seed", wit.seed, "Seed for random endpoints")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*c_analyze) return cmd_analyze(analyze, out, err);
    if (*c_graph) return cmd_graph(graph, out, err);
    if (*c_sim) return cmd_simulate(sim, out, err);
    if (*c_cbc) return cmd_cbc(cbc, out, err);
    if (*c_wit) return cmd_witness(wit, out, err);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace cbcchaos::cli
