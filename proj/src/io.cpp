#include "pss/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace pss {

namespace {

[[noreturn]] void parse_fail(const std::string& source, std::size_t line_no,
                             const std::string& message, Err code = Err::parse_error) {
  fail(code, source + ":" + std::to_string(line_no) + ": " + message);
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_size(const std::string& token, const std::string& source, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_fail(source, line_no, "expected a number, got '" + token + "'");
  }
  return value;
}

long long parse_int(const std::string& token, const std::string& source, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_fail(source, line_no, "expected an integer, got '" + token + "'");
  }
  return value;
}

// '.' stands for an empty bit field so that zero-width channels still
// tokenize into three columns.
std::string bits_field(const std::string& token) { return token == "." ? "" : token; }

std::string field_or_dot(std::string_view bits) {
  return bits.empty() ? "." : std::string(bits);
}

struct Header {
  std::size_t sensors = 0;
  std::size_t actuators = 0;
  VocabPtr vocab;
  std::optional<bool> closed_world;
  std::vector<std::string> cover;
  std::optional<std::size_t> labelers;
};

// Reads the '#' header block at the top of a corpus and builds its
// vocabulary. Returns the first body line index.
Header parse_header(const std::vector<std::string>& lines, const std::string& source,
                    std::size_t& body_start) {
  if (lines.empty()) parse_fail(source, 1, "missing '#vocab' header", Err::header_mismatch);
  Header header;
  std::optional<std::vector<Symbol>> symbols;
  bool saw_vocab = false;
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] != '#') break;
    const std::size_t line_no = i + 1;
    const auto tokens = split_ws(line);
    const std::string& key = tokens[0];
    if (key == "#vocab") {
      if (i != 0) parse_fail(source, line_no, "duplicate '#vocab' header", Err::header_mismatch);
      if (tokens.size() != 3 || tokens[1].rfind("sensors=", 0) != 0 ||
          tokens[2].rfind("actuators=", 0) != 0) {
        parse_fail(source, line_no, "expected '#vocab sensors=<n> actuators=<m>'",
                   Err::header_mismatch);
      }
      header.sensors = parse_size(tokens[1].substr(8), source, line_no);
      header.actuators = parse_size(tokens[2].substr(10), source, line_no);
      saw_vocab = true;
    } else if (i == 0) {
      parse_fail(source, line_no, "first line must be the '#vocab' header", Err::header_mismatch);
    } else if (key == "#symbols") {
      if (tokens.size() != 1 + header.sensors + header.actuators) {
        parse_fail(source, line_no, "'#symbols' must list every symbol", Err::header_mismatch);
      }
      std::vector<Symbol> parsed;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        std::string item = tokens[t];
        Symbol symbol;
        if (item.rfind("s:", 0) == 0) {
          symbol.channel = Channel::sensor;
        } else if (item.rfind("a:", 0) == 0) {
          symbol.channel = Channel::actuator;
        } else {
          parse_fail(source, line_no, "symbol '" + item + "' needs an s: or a: prefix",
                     Err::header_mismatch);
        }
        item = item.substr(2);
        if (!item.empty() && item.back() == '!') {
          symbol.transmittable = true;
          item.pop_back();
        }
        symbol.name = item;
        parsed.push_back(std::move(symbol));
      }
      std::size_t sensor_count = 0;
      for (const Symbol& s : parsed) {
        if (s.channel == Channel::sensor) ++sensor_count;
      }
      if (sensor_count != header.sensors || parsed.size() - sensor_count != header.actuators) {
        parse_fail(source, line_no, "'#symbols' channel counts do not match '#vocab'",
                   Err::header_mismatch);
      }
      symbols = std::move(parsed);
    } else if (key == "#mode") {
      if (tokens.size() != 2 || (tokens[1] != "closed-world" && tokens[1] != "explicit-negatives")) {
        parse_fail(source, line_no, "expected '#mode closed-world|explicit-negatives'",
                   Err::header_mismatch);
      }
      header.closed_world = tokens[1] == "closed-world";
    } else if (key == "#cover") {
      if (tokens.size() != 2) parse_fail(source, line_no, "expected '#cover <situation-bits>'");
      const std::string bits = bits_field(tokens[1]);
      if (bits.size() != header.sensors) {
        parse_fail(source, line_no, "'#cover' bits have length " + std::to_string(bits.size()) +
                                        ", header says sensors=" + std::to_string(header.sensors),
                   Err::header_mismatch);
      }
      header.cover.push_back(bits);
    } else if (key == "#labelers") {
      if (tokens.size() != 2) parse_fail(source, line_no, "expected '#labelers <k>'");
      header.labelers = parse_size(tokens[1], source, line_no);
    } else if (key == "#") {
      // comment line
    } else {
      parse_fail(source, line_no, "unknown header directive '" + key + "'");
    }
  }
  if (!saw_vocab) parse_fail(source, 1, "missing '#vocab' header", Err::header_mismatch);
  body_start = i;
  for (; i < lines.size(); ++i) {
    if (!lines[i].empty() && lines[i][0] == '#') {
      parse_fail(source, i + 1, "header line after the body");
    }
  }
  if (symbols) {
    try {
      header.vocab = std::make_shared<const Vocabulary>(std::move(*symbols));
    } catch (const Error& e) {
      parse_fail(source, 1, e.what(), Err::header_mismatch);
    }
  } else {
    header.vocab = default_vocabulary(header.sensors, header.actuators);
  }
  return header;
}

std::vector<std::string> split_lines(std::string_view text, const std::string& source) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) parse_fail(source, i + 1, "empty line");
  }
  return lines;
}

std::string vocab_header(const Vocabulary& vocab) {
  std::string out = "#vocab sensors=" + std::to_string(vocab.sensor_count()) +
                    " actuators=" + std::to_string(vocab.actuator_count()) + "\n";
  const VocabPtr def = default_vocabulary(vocab.sensor_count(), vocab.actuator_count());
  if (*def == vocab) return out;
  out += "#symbols";
  for (const Symbol& s : vocab.symbols()) {
    out += ' ';
    out += s.channel == Channel::sensor ? "s:" : "a:";
    out += s.name;
    if (s.transmittable) out += '!';
  }
  out += '\n';
  return out;
}

// Parses one '<s-bits> <r-bits>' pair into packed state bits.
Bits parse_state(const Header& header, const std::string& s_tok, const std::string& r_tok,
                 const std::string& source, std::size_t line_no) {
  const std::string s = bits_field(s_tok);
  const std::string r = bits_field(r_tok);
  if (s.size() != header.sensors) {
    parse_fail(source, line_no, "situation bits have length " + std::to_string(s.size()) +
                                    ", header says sensors=" + std::to_string(header.sensors),
               Err::header_mismatch);
  }
  if (r.size() != header.actuators) {
    parse_fail(source, line_no, "response bits have length " + std::to_string(r.size()) +
                                    ", header says actuators=" + std::to_string(header.actuators),
               Err::header_mismatch);
  }
  try {
    return compose_bits(*header.vocab, s, r);
  } catch (const Error& e) {
    parse_fail(source, line_no, e.what());
  }
}

}  // namespace

VocabPtr default_vocabulary(std::size_t sensors, std::size_t actuators) {
  std::vector<Symbol> symbols;
  symbols.reserve(sensors + actuators);
  for (std::size_t i = 0; i < sensors; ++i) {
    symbols.push_back({"s" + std::to_string(i), Channel::sensor, false});
  }
  for (std::size_t j = 0; j < actuators; ++j) {
    symbols.push_back({"r" + std::to_string(j), Channel::actuator, true});
  }
  return std::make_shared<const Vocabulary>(std::move(symbols));
}

std::string concept_to_text(const Concept& c) {
  std::string out = vocab_header(*c.vocab());
  for (const Implicant& imp : c.implicants()) {
    out += implicant_to_string(imp, *c.vocab());
    out += '\n';
  }
  return out;
}

Concept concept_from_text(std::string_view text, bool strict, const std::string& source) {
  const auto lines = split_lines(text, source);
  std::size_t body = 0;
  const Header header = parse_header(lines, source, body);
  const Vocabulary& vocab = *header.vocab;
  std::vector<Implicant> implicants;
  for (std::size_t i = body; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string& line = lines[i];
    if (line == "TRUE") {
      implicants.push_back(Implicant{});
      continue;
    }
    Implicant imp;
    std::size_t last_index = 0;
    bool first = true;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t amp = line.find('&', pos);
      if (amp == std::string::npos) amp = line.size();
      std::string literal = line.substr(pos, amp - pos);
      // trim
      while (!literal.empty() && literal.front() == ' ') literal.erase(literal.begin());
      while (!literal.empty() && literal.back() == ' ') literal.pop_back();
      const std::size_t eq = literal.find('=');
      if (literal.empty() || eq == std::string::npos) {
        parse_fail(source, line_no, "expected 'name=bit', got '" + literal + "'");
      }
      const std::string name = literal.substr(0, eq);
      const std::string bit = literal.substr(eq + 1);
      const auto index = vocab.index_of(name);
      if (!index) parse_fail(source, line_no, "unknown symbol '" + name + "'");
      if (bit != "0" && bit != "1") {
        parse_fail(source, line_no, "literal value must be 0 or 1, got '" + bit + "'");
      }
      const Bits mask_bit = Bits{1} << *index;
      if (imp.mask & mask_bit) {
        const bool existing = (imp.value & mask_bit) != 0;
        const bool incoming = bit == "1";
        if (existing != incoming) {
          parse_fail(source, line_no, "contradictory literals on '" + name + "'");
        }
        if (strict) parse_fail(source, line_no, "duplicate literal on '" + name + "'");
      }
      if (strict && !first && *index <= last_index) {
        parse_fail(source, line_no, "literals must be in ascending index order");
      }
      imp.mask |= mask_bit;
      if (bit == "1") imp.value |= mask_bit;
      last_index = *index;
      first = false;
      if (amp == line.size()) break;
      pos = amp + 1;
    }
    implicants.push_back(imp);
  }
  if (strict) {
    const std::vector<Implicant> canonical = canonicalize(implicants);
    if (canonical != implicants) {
      parse_fail(source, body + 1, "concept body is not in canonical form");
    }
  }
  return Concept(header.vocab, std::move(implicants));
}

std::string ostensive_to_text(const OstensiveDefinition& def) {
  validate(def);
  const Vocabulary& v = *def.vocab;
  std::string out = vocab_header(v);
  if (!def.closed_world) out += "#mode explicit-negatives\n";
  std::set<std::string> mentioned;
  for (Bits p : def.positives) mentioned.insert(project_bits(v, p, Channel::sensor));
  for (Bits q : def.explicit_negatives) mentioned.insert(project_bits(v, q, Channel::sensor));
  for (const std::string& s : def.covered_situations) {
    if (!mentioned.count(s)) out += "#cover " + field_or_dot(s) + "\n";
  }
  const std::size_t n = v.size();
  auto lex = [n](Bits a, Bits b) { return lex_less_bits(a, b, n); };
  std::vector<Bits> positives(def.positives.begin(), def.positives.end());
  std::vector<Bits> negatives(def.explicit_negatives.begin(), def.explicit_negatives.end());
  std::sort(positives.begin(), positives.end(), lex);
  std::sort(negatives.begin(), negatives.end(), lex);
  for (Bits p : positives) {
    out += field_or_dot(project_bits(v, p, Channel::sensor)) + " " +
           field_or_dot(project_bits(v, p, Channel::actuator)) + " +\n";
  }
  for (Bits q : negatives) {
    out += field_or_dot(project_bits(v, q, Channel::sensor)) + " " +
           field_or_dot(project_bits(v, q, Channel::actuator)) + " -\n";
  }
  return out;
}

OstensiveDefinition ostensive_from_text(std::string_view text,
                                        std::optional<bool> closed_world_override,
                                        const std::string& source) {
  const auto lines = split_lines(text, source);
  std::size_t body = 0;
  const Header header = parse_header(lines, source, body);
  bool closed_world = true;
  if (header.closed_world && closed_world_override &&
      *header.closed_world != *closed_world_override) {
    parse_fail(source, 1, "corpus '#mode' contradicts the requested mode", Err::header_mismatch);
  }
  if (closed_world_override) {
    closed_world = *closed_world_override;
  } else if (header.closed_world) {
    closed_world = *header.closed_world;
  }

  OstensiveDefinition def;
  def.vocab = header.vocab;
  def.closed_world = closed_world;
  for (const std::string& s : header.cover) def.covered_situations.insert(s);
  std::map<Bits, char> labels;
  for (std::size_t i = body; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto tokens = split_ws(lines[i]);
    if (tokens.size() != 3 || (tokens[2] != "+" && tokens[2] != "-")) {
      parse_fail(source, line_no, "expected '<s-bits> <r-bits> <+|->'");
    }
    const Bits state = parse_state(header, tokens[0], tokens[1], source, line_no);
    const char label = tokens[2][0];
    if (label == '-' && closed_world) {
      parse_fail(source, line_no, "explicit negative in a closed-world corpus");
    }
    auto it = labels.find(state);
    if (it != labels.end() && it->second != label) {
      parse_fail(source, line_no, "state labeled both ways", Err::duplicate_state);
    }
    labels.emplace(state, label);
    def.covered_situations.insert(bits_field(tokens[0]));
    if (label == '+') {
      def.positives.insert(state);
    } else {
      def.explicit_negatives.insert(state);
    }
  }
  validate(def);
  return def;
}

std::string norms_to_text(const NormCorpus& corpus) {
  validate(corpus);
  const Vocabulary& v = *corpus.vocab;
  std::string out = vocab_header(v);
  out += "#labelers " + std::to_string(corpus.labelers) + "\n";
  const std::size_t n = v.size();
  std::vector<Bits> states;
  states.reserve(corpus.votes.size());
  for (const auto& [state, votes] : corpus.votes) states.push_back(state);
  std::sort(states.begin(), states.end(), [n](Bits a, Bits b) { return lex_less_bits(a, b, n); });
  for (Bits state : states) {
    out += field_or_dot(project_bits(v, state, Channel::sensor)) + " " +
           field_or_dot(project_bits(v, state, Channel::actuator)) + " " +
           corpus.votes.at(state) + "\n";
  }
  return out;
}

NormCorpus norms_from_text(std::string_view text, const std::string& source) {
  const auto lines = split_lines(text, source);
  std::size_t body = 0;
  const Header header = parse_header(lines, source, body);
  if (!header.labelers) {
    parse_fail(source, 1, "norm corpus needs a '#labelers' header", Err::header_mismatch);
  }
  NormCorpus corpus;
  corpus.vocab = header.vocab;
  corpus.labelers = *header.labelers;
  for (std::size_t i = body; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto tokens = split_ws(lines[i]);
    if (tokens.size() != 3) parse_fail(source, line_no, "expected '<s-bits> <r-bits> <votes>'");
    const Bits state = parse_state(header, tokens[0], tokens[1], source, line_no);
    const std::string& votes = tokens[2];
    if (votes.size() != corpus.labelers) {
      parse_fail(source, line_no, "vote string has length " + std::to_string(votes.size()) +
                                      ", header says labelers=" + std::to_string(corpus.labelers),
                 Err::header_mismatch);
    }
    for (char c : votes) {
      if (c != '+' && c != '-' && c != '.') {
        parse_fail(source, line_no, std::string("vote characters must be +, - or ., got '") + c + "'");
      }
    }
    auto it = corpus.votes.find(state);
    if (it != corpus.votes.end() && it->second != votes) {
      parse_fail(source, line_no, "state voted twice with different strings", Err::duplicate_state);
    }
    corpus.votes.emplace(state, votes);
  }
  validate(corpus);
  return corpus;
}

std::string objective_to_text(const ObjectiveFunction& objective) {
  const Vocabulary& v = *objective.vocab;
  std::string out = vocab_header(v);
  for (std::size_t i = 0; i < objective.weights.size(); ++i) {
    if (objective.weights[i] != 0) {
      out += "w " + v.symbol(i).name + " " + std::to_string(objective.weights[i]) + "\n";
    }
  }
  out += "bias " + std::to_string(objective.bias) + "\n";
  out += "theta " + std::to_string(objective.theta) + "\n";
  return out;
}

ObjectiveFunction objective_from_text(std::string_view text, const std::string& source) {
  const auto lines = split_lines(text, source);
  std::size_t body = 0;
  const Header header = parse_header(lines, source, body);
  ObjectiveFunction objective;
  objective.vocab = header.vocab;
  objective.weights.assign(header.vocab->size(), 0);
  std::set<std::string> seen;
  bool saw_bias = false;
  bool saw_theta = false;
  for (std::size_t i = body; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto tokens = split_ws(lines[i]);
    if (tokens.size() == 3 && tokens[0] == "w") {
      const auto index = header.vocab->index_of(tokens[1]);
      if (!index) parse_fail(source, line_no, "unknown symbol '" + tokens[1] + "'");
      if (!seen.insert(tokens[1]).second) {
        parse_fail(source, line_no, "duplicate weight for '" + tokens[1] + "'");
      }
      objective.weights[*index] = parse_int(tokens[2], source, line_no);
    } else if (tokens.size() == 2 && tokens[0] == "bias") {
      if (saw_bias) parse_fail(source, line_no, "duplicate 'bias'");
      saw_bias = true;
      objective.bias = parse_int(tokens[1], source, line_no);
    } else if (tokens.size() == 2 && tokens[0] == "theta") {
      if (saw_theta) parse_fail(source, line_no, "duplicate 'theta'");
      saw_theta = true;
      objective.theta = parse_int(tokens[1], source, line_no);
    } else {
      parse_fail(source, line_no, "expected 'w <name> <int>', 'bias <int>' or 'theta <int>'");
    }
  }
  return objective;
}

std::string dialogues_to_text(const VocabPtr& vocab, const std::vector<DialogueRecord>& records) {
  std::string out = vocab_header(*vocab);
  for (const DialogueRecord& record : records) {
    require_same_vocab(vocab, record.state.vocab());
    out += field_or_dot(record.state.situation()) + " " +
           field_or_dot(record.state.response()) + " tokens=";
    if (record.tokens.empty()) {
      out += "-";
    } else {
      bool first = true;
      for (const std::string& token : record.tokens) {
        if (!first) out += ",";
        out += token;
        first = false;
      }
    }
    out += '\n';
  }
  return out;
}

std::pair<VocabPtr, std::vector<DialogueRecord>> dialogues_from_text(std::string_view text,
                                                                     const std::string& source) {
  const auto lines = split_lines(text, source);
  std::size_t body = 0;
  const Header header = parse_header(lines, source, body);
  std::vector<DialogueRecord> records;
  for (std::size_t i = body; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto tokens = split_ws(lines[i]);
    if (tokens.size() != 3 || tokens[2].rfind("tokens=", 0) != 0) {
      parse_fail(source, line_no, "expected '<s-bits> <r-bits> tokens=<csv|->'");
    }
    const Bits state = parse_state(header, tokens[0], tokens[1], source, line_no);
    DialogueRecord record{DecisionState(header.vocab, state), {}};
    const std::string list = tokens[2].substr(7);
    if (list != "-") {
      std::size_t pos = 0;
      while (pos <= list.size()) {
        std::size_t comma = list.find(',', pos);
        if (comma == std::string::npos) comma = list.size();
        const std::string token = list.substr(pos, comma - pos);
        if (!valid_token(token)) {
          parse_fail(source, line_no, "token '" + token + "' must match [A-Za-z0-9_]+");
        }
        record.tokens.insert(token);
        if (comma == list.size()) break;
        pos = comma + 1;
      }
    }
    records.push_back(std::move(record));
  }
  return {header.vocab, std::move(records)};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::io_error, "cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Err::io_error, "cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out.good()) fail(Err::io_error, "failed writing '" + path.string() + "'");
}

Concept load_concept(const std::filesystem::path& path, bool strict) {
  return concept_from_text(read_file(path), strict, path.string());
}

void save_concept(const Concept& c, const std::filesystem::path& path) {
  write_file(path, concept_to_text(c));
}

OstensiveDefinition load_ostensive(const std::filesystem::path& path,
                                   std::optional<bool> closed_world_override) {
  return ostensive_from_text(read_file(path), closed_world_override, path.string());
}

void save_ostensive(const OstensiveDefinition& def, const std::filesystem::path& path) {
  write_file(path, ostensive_to_text(def));
}

NormCorpus load_norms(const std::filesystem::path& path) {
  return norms_from_text(read_file(path), path.string());
}

void save_norms(const NormCorpus& corpus, const std::filesystem::path& path) {
  write_file(path, norms_to_text(corpus));
}

ObjectiveFunction load_objective(const std::filesystem::path& path) {
  return objective_from_text(read_file(path), path.string());
}

void save_objective(const ObjectiveFunction& objective, const std::filesystem::path& path) {
  write_file(path, objective_to_text(objective));
}

std::pair<VocabPtr, std::vector<DialogueRecord>> load_dialogues(
    const std::filesystem::path& path) {
  return dialogues_from_text(read_file(path), path.string());
}

void save_dialogues(const VocabPtr& vocab, const std::vector<DialogueRecord>& records,
                    const std::filesystem::path& path) {
  write_file(path, dialogues_to_text(vocab, records));
}

Lexicon load_lexicon(const std::filesystem::path& dir, VocabPtr fallback_vocab, bool strict) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::exists(dir)) {
    if (!std::filesystem::is_directory(dir)) {
      fail(Err::io_error, "'" + dir.string() + "' is not a directory");
    }
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".cpt") {
        files.push_back(entry.path());
      }
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    if (!fallback_vocab) {
      fail(Err::io_error, "lexicon directory '" + dir.string() +
                              "' has no symbols and no vocabulary was supplied");
    }
    return Lexicon(fallback_vocab);
  }
  std::optional<Lexicon> lexicon;
  for (const auto& file : files) {
    const std::string token = file.stem().string();
    if (!valid_token(token)) {
      fail(Err::parse_error, "lexicon file '" + file.string() + "' is not a valid token name");
    }
    Concept interpretant = load_concept(file, strict);
    if (!lexicon) lexicon.emplace(interpretant.vocab());
    require_same_vocab(lexicon->vocab(), interpretant.vocab());
    SymbolTriad triad{token, std::move(interpretant), {}, {}};
    const auto memory_path = dir / "memory" / (token + ".odc");
    if (std::filesystem::exists(memory_path)) {
      const OstensiveDefinition memory = load_ostensive(memory_path);
      require_same_vocab(lexicon->vocab(), memory.vocab);
      for (Bits p : memory.positives) {
        DecisionState state(lexicon->vocab(), p);
        if (!triad.interpretant.evaluate_bits(p)) {
          fail(Err::invariant_violation, "memory state " + state.assignment() +
                                             " does not satisfy the interpretant of '" + token +
                                             "'");
        }
        triad.commit(state);
      }
    }
    lexicon->insert(std::move(triad));
  }
  if (fallback_vocab) require_same_vocab(lexicon->vocab(), fallback_vocab);
  return *lexicon;
}

void save_triad(const SymbolTriad& triad, const std::filesystem::path& dir) {
  save_concept(triad.interpretant, dir / (triad.token + ".cpt"));
  OstensiveDefinition memory;
  memory.vocab = triad.interpretant.vocab();
  memory.closed_world = false;
  for (const DecisionState& state : triad.referent_memory) {
    memory.positives.insert(state.bits());
    memory.covered_situations.insert(state.situation());
  }
  save_ostensive(memory, dir / "memory" / (triad.token + ".odc"));
}

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& dir) {
  for (const auto& [token, triad] : lexicon.triads()) save_triad(triad, dir);
}

}  // namespace pss
