#include "cli.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "streamfix/answer.h"
#include "streamfix/entailment.h"
#include "streamfix/errors.h"
#include "streamfix/levelmap.h"
#include "streamfix/operators.h"
#include "streamfix/parser.h"
#include "streamfix/serialize.h"

namespace streamfix::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// Bad flags, unreadable files, violated preconditions.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string program_path;
  std::string data_path;
  std::string model_path;
  std::string upper_path;
  std::vector<std::string> gamma;
  TimePoint at = 1;
  std::string horizon;
  std::vector<std::string> universe_atoms;
  std::string mode = "flp";
  std::string interval;
  std::optional<std::size_t> bound;
  std::string format = "text";
  std::string formula;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename Parse>
auto ParseFile(const std::string& path, Parse&& parse) {
  const std::string text = ReadFile(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

Interval ParseInterval(const std::string& text, const char* flag) {
  std::string s = text;
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
    s = s.substr(1, s.size() - 2);
  }
  const auto comma = s.find(',');
  auto number = [&](std::string_view part) {
    TimePoint v = 0;
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || v == 0) {
      throw UsageError(std::string(flag) + " expects [lo,hi] with 1 <= lo <= hi, got '" +
                       text + "'");
    }
    return v;
  };
  if (comma == std::string::npos) number("");
  const TimePoint lo = number(std::string_view(s).substr(0, comma));
  const TimePoint hi = number(std::string_view(s).substr(comma + 1));
  if (hi < lo) {
    throw UsageError(std::string(flag) + " is empty: '" + text + "'");
  }
  return Interval::Closed(lo, hi);
}

std::string YesNo(bool b) { return b ? "yes" : "no"; }

Json StreamJson(const Stream& s) { return Json::parse(StreamToJson(s)); }

std::string AtomList(const AtomSet& atoms) {
  std::string s = "{";
  for (const auto& a : atoms) {
    if (s.size() > 1) s += ",";
    s += a;
  }
  return s + "}";
}

class Session {
 public:
  Session(const RunConfig& config, std::ostream& out, std::ostream& err)
      : config_(config), out_(out), err_(err) {}

  int Execute(const char* env_bound);

 private:
  bool structured() const { return config_.format != "text"; }

  void Emit(Json record) { out_ << record.dump() << '\n'; }
  void Line(const std::string& text) { out_ << text << '\n'; }

  void EmitMeta();
  void LoadInputs(const char* env_bound);
  const Program& RequireProgram() const;
  const Stream& RequireModel() const;

  int Validate();
  int Eval();
  int ModelCheck();
  int RunTp();
  int Fixpoint();
  int AnswerStreams();
  int LevelMap();
  int TranslateBoxplus();

  const RunConfig& config_;
  std::ostream& out_;
  std::ostream& err_;

  std::optional<Program> program_;
  Stream data_;
  std::optional<Stream> model_;
  AtomSet gamma_;
  SearchBounds bounds_;
  std::optional<Interval> interval_;
};

void Session::EmitMeta() {
  Json cfg;
  auto put = [&](const char* key, const std::string& value) {
    if (!value.empty()) cfg[key] = value;
  };
  put("program", config_.program_path);
  put("data", config_.data_path);
  put("model", config_.model_path);
  put("upper", config_.upper_path);
  put("formula", config_.formula);
  cfg["at"] = config_.at;
  cfg["gamma"] = gamma_;
  if (config_.command == "answer-streams" ||
      config_.command == "model-check") {
    cfg["mode"] = config_.mode;
  }
  put("interval", config_.interval);
  put("horizon", config_.horizon);
  if (!config_.universe_atoms.empty()) {
    cfg["universe_atoms"] = config_.universe_atoms;
  }
  cfg["bound"] = bounds_.enumeration;
  Emit({{"record", "meta"},
        {"engine", "streamfix"},
        {"version", kVersion},
        {"command", config_.command},
        {"config", cfg}});
}

void Session::LoadInputs(const char* env_bound) {
  if (config_.bound) {
    bounds_.enumeration = bounds_.three_valued = *config_.bound;
  } else if (env_bound != nullptr && *env_bound != '\0') {
    std::size_t v = 0;
    const std::string_view s(env_bound);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("STREAMFIX_BOUND must be a number, got '" +
                       std::string(s) + "'");
    }
    bounds_.enumeration = bounds_.three_valued = v;
  }

  if (!config_.program_path.empty()) {
    program_ = ParseFile(config_.program_path,
                         [](const std::string& s) { return ParseProgram(s); });
  }
  std::optional<AtomSet> stanza;
  if (!config_.data_path.empty()) {
    StreamFile file = ParseFile(config_.data_path, [](const std::string& s) {
      return ParseStreamFile(s);
    });
    data_ = std::move(file.stream);
    stanza = std::move(file.gamma);
  }
  if (!config_.model_path.empty()) {
    StreamFile file = ParseFile(config_.model_path, [](const std::string& s) {
      return ParseStreamFile(s);
    });
    model_ = std::move(file.stream);
    if (!stanza) stanza = std::move(file.gamma);
  }
  if (!config_.gamma.empty()) {
    gamma_ = AtomSet(config_.gamma.begin(), config_.gamma.end());
    if (stanza && *stanza != gamma_) {
      err_ << "warning: --gamma " << AtomList(gamma_)
           << " overrides the gamma: stanza " << AtomList(*stanza) << '\n';
    }
  } else if (stanza) {
    gamma_ = *stanza;
  }
  try {
    ValidateBackground(gamma_);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (!config_.interval.empty()) {
    interval_ = ParseInterval(config_.interval, "--interval");
    if (!interval_->Contains(config_.at)) {
      throw UsageError("--at " + std::to_string(config_.at) +
                       " is not in --interval " + ToString(*interval_));
    }
  }
}

const Program& Session::RequireProgram() const {
  if (!program_) throw UsageError(config_.command + " requires --program");
  return *program_;
}

const Stream& Session::RequireModel() const {
  if (!model_) throw UsageError(config_.command + " requires --model");
  return *model_;
}

int Session::Execute(const char* env_bound) {
  LoadInputs(env_bound);
  if (structured()) EmitMeta();
  const std::string& c = config_.command;
  if (c == "validate") return Validate();
  if (c == "eval") return Eval();
  if (c == "model-check") return ModelCheck();
  if (c == "tp") return RunTp();
  if (c == "fixpoint") return Fixpoint();
  if (c == "answer-streams") return AnswerStreams();
  if (c == "level-map") return LevelMap();
  return TranslateBoxplus();
}

int Session::Validate() {
  const Program& program = RequireProgram();
  std::size_t violations = 0;
  for (std::size_t i = 0; i < program.rules.size(); ++i) {
    const Rule& rule = program.rules[i];
    std::string text = ToString(rule);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    const bool trivial = rule.head.is(FormulaKind::kTop);
    const bool consistent = CheckTConsistent(rule.head, config_.at, gamma_);
    if (trivial || !consistent) ++violations;
    if (structured()) {
      Emit({{"record", "rule"},
            {"index", i + 1},
            {"rule", text},
            {"normal", true},
            {"trivial_head", trivial},
            {"t_consistent", consistent}});
    } else if (trivial) {
      Line("rule " + std::to_string(i + 1) + ": violation: head is true: " +
           text);
    } else if (consistent) {
      Line("rule " + std::to_string(i + 1) + ": ok: " + text);
    } else {
      Line("rule " + std::to_string(i + 1) + ": violation: head is not " +
           std::to_string(config_.at) + "-consistent: " + text);
    }
  }
  if (structured()) {
    Emit({{"record", "verdict"}, {"valid", violations == 0}});
  } else {
    Line(violations == 0 ? "all heads pass at t=" + std::to_string(config_.at)
                         : std::to_string(violations) + " violation(s)");
  }
  return violations == 0 ? kAffirmative : kNegative;
}

int Session::Eval() {
  Formula f;
  try {
    f = ParseFormula(config_.formula);
  } catch (const ParseError& e) {
    throw UsageError(std::string("formula:") + e.what());
  }
  const TimePoint t = config_.at;
  const bool modal = ContainsKind(f, FormulaKind::kBox) ||
                     ContainsKind(f, FormulaKind::kDiamond);

  // The support a top-level box or diamond ranges over, after leading windows.
  auto support_of = [&](const Stream& s) {
    StreamView view(s);
    const Formula* g = &f;
    while (g->is(FormulaKind::kWindow)) {
      view = view.Window(g->left(), g->right(), t);
      g = &g->operand();
    }
    return view.Support();
  };

  bool verdict = false;
  std::string semantics = "refined";
  std::vector<std::pair<std::string, Interval>> supports;
  if (!config_.upper_path.empty()) {
    if (interval_) throw UsageError("--upper and --interval are exclusive");
    const Stream upper = ParseFile(config_.upper_path, [](const std::string& s) {
                           return ParseStreamFile(s);
                         }).stream;
    if (!IsSubstream(data_, upper)) {
      throw UsageError("--data must be a substream of --upper");
    }
    semantics = "three-valued";
    verdict = Entails3(ThreeValuedStream(data_, upper), t, f, gamma_,
                       bounds_.three_valued);
    supports = {{"lower", support_of(data_)}, {"upper", support_of(upper)}};
  } else if (interval_) {
    semantics = "fixed-interval";
    verdict = EntailsFixed(data_, *interval_, t, f, gamma_);
    supports = {{"interval", *interval_}};
  } else {
    verdict = Entails(data_, t, f, gamma_);
    supports = {{"support", support_of(data_)}};
  }

  if (structured()) {
    Json record{{"record", "verdict"},
                {"semantics", semantics},
                {"formula", ToString(f)},
                {"entailed", verdict}};
    if (modal) {
      for (const auto& [name, range] : supports) record[name] = ToString(range);
    }
    Emit(record);
  } else {
    Line(verdict ? "true" : "false");
    if (modal) {
      for (const auto& [name, range] : supports) {
        Line(name + ": " + ToString(range));
      }
    }
  }
  return verdict ? kAffirmative : kNegative;
}

AnswerMode ParseMode(const std::string& mode) {
  if (mode == "flp") return AnswerMode::kFlp;
  if (mode == "fixpoint") return AnswerMode::kFixpoint;
  return AnswerMode::kBeck;
}

int Session::ModelCheck() {
  const Program& program = RequireProgram();
  const Stream& model = RequireModel();
  const TimePoint t = config_.at;
  const AnswerMode mode = ParseMode(config_.mode);
  bool is_model = false;
  bool is_answer = false;
  std::vector<std::size_t> reduct;
  if (mode == AnswerMode::kBeck) {
    if (!interval_) throw UsageError("--mode beck requires --interval");
    is_model = IsTTModel(program, model, *interval_, t, data_, gamma_);
    is_answer = is_model && IsTTAnswerStream(program, model, *interval_, t,
                                             data_, gamma_, bounds_);
  } else {
    is_model = IsTModel(program, model, t, data_, gamma_);
    reduct = ReductIndices(program, model, t, gamma_);
    if (is_model) {
      is_answer = mode == AnswerMode::kFlp
                      ? IsTAnswerStream(program, model, t, data_, gamma_,
                                        bounds_)
                      : IsPhiAnswerStream(program, model, t, data_, gamma_,
                                          bounds_);
    }
  }
  for (auto& i : reduct) ++i;
  if (structured()) {
    Json record{{"record", "verdict"},
                {"model", ToString(model)},
                {"is_model", is_model},
                {"is_answer_stream", is_answer}};
    if (mode != AnswerMode::kBeck) record["reduct"] = reduct;
    Emit(record);
  } else {
    Line(std::string(mode == AnswerMode::kBeck ? "(t,T)-model: " : "t-model: ") +
         YesNo(is_model));
    if (mode != AnswerMode::kBeck) {
      std::string rules;
      for (std::size_t i : reduct) {
        rules += (rules.empty() ? "" : ", ") + std::to_string(i);
      }
      Line("reduct: {" + rules + "}");
    }
    Line("answer stream (" + config_.mode + "): " + YesNo(is_answer));
  }
  return is_answer ? kAffirmative : kNegative;
}

int Session::RunTp() {
  const Program& program = RequireProgram();
  const Stream& model = RequireModel();
  if (!IsSubstream(data_, model)) {
    throw UsageError("data stream is not a substream of the model");
  }
  const Stream image = Tp(program, data_, gamma_, config_.at, model);
  const bool prefixed = IsSubstream(image, model);
  const bool fixed = image == model;
  if (structured()) {
    Emit({{"record", "tp"},
          {"input", StreamJson(model)},
          {"output", StreamJson(image)},
          {"prefixed_point", prefixed},
          {"fixed_point", fixed}});
  } else {
    Line("T_P(I) = " + ToString(image));
    Line("prefixed point: " + YesNo(prefixed));
    Line("fixed point: " + YesNo(fixed));
  }
  return prefixed ? kAffirmative : kNegative;
}

int Session::Fixpoint() {
  const Program& program = RequireProgram();
  const Stream& model = RequireModel();
  if (!IsTModel(program, model, config_.at, data_, gamma_)) {
    throw UsageError(ToString(model) + " is not a " +
                     std::to_string(config_.at) + "-model of the program");
  }
  const FixpointTrace trace = PhiDagger(program, data_, gamma_, config_.at,
                                        model, bounds_.three_valued);
  const bool answer = trace.Fixpoint() == model;
  if (structured()) {
    Json record = Json::parse(TraceToJson(trace));
    record = Json{{"record", "trace"},
                  {"stages", record["stages"]},
                  {"converged", record["converged"]}};
    Emit(record);
    Emit({{"record", "verdict"}, {"phi_answer_stream", answer}});
  } else {
    for (std::size_t i = 0; i < trace.stages.size(); ++i) {
      Line("stage " + std::to_string(i) + ": " + ToString(trace.stages[i]));
    }
    Line("converged: " + YesNo(trace.converged));
    Line(answer ? "verdict: phi-answer stream"
                : "verdict: model but not a phi-answer stream");
  }
  return answer ? kAffirmative : kNegative;
}

int Session::AnswerStreams() {
  const Program& program = RequireProgram();
  const TimePoint t = config_.at;
  AnswerQuery query{ParseMode(config_.mode), {}};
  if (query.mode == AnswerMode::kBeck) {
    if (!interval_) throw UsageError("--mode beck requires --interval");
    query.interval = *interval_;
  }
  Universe universe = DefaultUniverse(program, data_, t, gamma_);
  if (query.mode == AnswerMode::kBeck) {
    universe.horizon = Interval::Closed(
        std::min(universe.horizon.lo(), query.interval.lo()),
        std::max(universe.horizon.hi(), query.interval.hi()));
  }
  if (!config_.horizon.empty()) {
    universe.horizon = ParseInterval(config_.horizon, "--horizon");
  }
  if (!config_.universe_atoms.empty()) {
    universe.atoms =
        AtomSet(config_.universe_atoms.begin(), config_.universe_atoms.end());
  }
  if (!IsSubstream(data_, universe.Full())) {
    throw UsageError("data stream does not fit the universe " +
                     AtomList(universe.atoms) + " x " +
                     ToString(universe.horizon));
  }
  const std::vector<Stream> streams =
      EnumerateAnswerStreams(program, t, data_, gamma_, universe, query,
                             bounds_);
  if (structured()) {
    Emit({{"record", "universe"},
          {"mode", config_.mode},
          {"atoms", universe.atoms},
          {"horizon", ToString(universe.horizon)}});
    for (const auto& s : streams) {
      Emit({{"record", "answer_stream"}, {"stream", StreamJson(s)}});
    }
    Emit({{"record", "summary"}, {"count", streams.size()}});
  } else {
    Line("mode: " + config_.mode);
    Line("universe: " + AtomList(universe.atoms) + " x " +
         ToString(universe.horizon));
    for (const auto& s : streams) Line(ToString(s));
    Line("count: " + std::to_string(streams.size()));
  }
  return streams.empty() ? kNegative : kAffirmative;
}

int Session::LevelMap() {
  const Program& program = RequireProgram();
  const Stream& model = RequireModel();
  if (!IsTModel(program, model, config_.at, data_, gamma_)) {
    throw UsageError(ToString(model) + " is not a " +
                     std::to_string(config_.at) + "-model of the program");
  }
  const auto mapping =
      ExtractLevelMapping(program, data_, gamma_, config_.at, model, bounds_);
  if (!mapping) {
    if (structured()) {
      Emit({{"record", "verdict"}, {"total_level_mapping", false}});
    } else {
      Line("no total level mapping (circular justification)");
    }
    return kNegative;
  }
  const LevelMappingReport report =
      VerifyLevelMapping(*mapping, program, data_, gamma_, config_.at, bounds_);
  if (structured()) {
    Json levels = Json::parse(PartitioningToJson(*mapping));
    Emit({{"record", "levels"}, {"levels", levels["levels"]}});
    Emit({{"record", "verdict"},
          {"total_level_mapping", report.total},
          {"valid", report.valid}});
  } else {
    for (std::size_t i = 0; i < mapping->parts.size(); ++i) {
      Line("S" + std::to_string(i) + ": " + ToString(mapping->parts[i]));
    }
    Line("valid: " + YesNo(report.valid) + ", total: " + YesNo(report.total));
  }
  return report.total ? kAffirmative : kNegative;
}

int Session::TranslateBoxplus() {
  const Program& program = RequireProgram();
  if (!interval_) throw UsageError("translate-boxplus requires --interval");
  const BoxplusTranslation translation =
      BoxplusTranslate(program, *interval_, config_.at);
  if (structured()) {
    Emit({{"record", "program"},
          {"marker", translation.marker},
          {"text", ToString(translation.program)}});
  } else {
    out_ << ToString(translation.program);
  }
  return kAffirmative;
}

void AddOptions(CLI::App* cmd, RunConfig& config, const std::string& flags) {
  auto has = [&](const char* name) {
    return (" " + flags + " ").find(std::string(" ") + name + " ") !=
           std::string::npos;
  };
  if (has("program")) {
    cmd->add_option("--program", config.program_path, "Program file")
        ->required();
  }
  if (has("data")) cmd->add_option("--data", config.data_path, "Data stream D");
  if (has("model")) {
    cmd->add_option("--model", config.model_path, "Interpretation stream I")
        ->required();
  }
  if (has("upper")) {
    cmd->add_option("--upper", config.upper_path,
                    "Upper stream; --data becomes the lower stream");
  }
  cmd->add_option("--at", config.at, "Evaluation time point")
      ->check(CLI::PositiveNumber);
  if (has("gamma")) {
    cmd->add_option("--gamma", config.gamma, "Background atom (repeatable)")
        ->allow_extra_args(false);
  }
  if (has("mode")) {
    cmd->add_option("--mode", config.mode, "flp, fixpoint or beck")
        ->check(CLI::IsMember({"flp", "fixpoint", "beck"}));
  }
  if (has("interval")) {
    cmd->add_option("--interval", config.interval, "Fixed interval T as [lo,hi]");
  }
  if (has("horizon")) {
    cmd->add_option("--horizon", config.horizon, "Universe time points [lo,hi]");
    cmd->add_option("--universe-atoms", config.universe_atoms,
                    "Universe atoms (comma separated)")
        ->delimiter(',');
  }
  if (has("bound")) {
    cmd->add_option("--bound", config.bound, "Enumeration cap");
  }
  cmd->add_option("--format", config.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured", "json"}));
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err, const char* env_bound) {
  RunConfig config;
  CLI::App app{"Reasoning engine for stream logic programs", "streamfix"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  struct Command {
    const char* name;
    const char* help;
    const char* flags;
  };
  const Command commands[] = {
      {"validate", "Check rule heads for normality and t-consistency",
       "program gamma data"},
      {"eval", "Evaluate a formula on a stream",
       "data upper gamma interval bound"},
      {"model-check", "Check whether a stream is a model and answer stream",
       "program data model gamma mode interval bound"},
      {"tp", "Apply the immediate consequence operator",
       "program data model gamma"},
      {"fixpoint", "Compute the least fixed point trace of the Fitting operator",
       "program data model gamma bound"},
      {"answer-streams", "Enumerate answer streams in a finite universe",
       "program data gamma mode interval horizon bound"},
      {"level-map", "Extract and verify a level mapping",
       "program data model gamma bound"},
      {"translate-boxplus", "Translate a program for a fixed interval",
       "program interval"},
  };
  for (const auto& c : commands) {
    CLI::App* cmd = app.add_subcommand(c.name, c.help);
    AddOptions(cmd, config, c.flags);
    if (std::string(c.name) == "eval") {
      cmd->add_option("formula", config.formula, "Formula text")->required();
    }
    cmd->callback([&config, name = c.name] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAffirmative : kUsageError;
  }

  try {
    Session session(config, out, err);
    return session.Execute(env_bound);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBoundExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace streamfix::cli
