// Copyright 2026 The GDLZ Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gdlz/model_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "gdlz/parse.hpp"

namespace gdlz {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// Splits on commas at parenthesis depth zero, so "turn(P1),smaller(0,1)"
// yields two entries. Empty input yields no entries.
std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& s, const std::string& where) {
  std::int64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw io_error(where + ": bad integer '" + s + "'");
  return v;
}

struct line_reader {
  explicit line_reader(const std::string& text) : is(text) {}

  bool next(std::string& out, int& line_no) {
    std::string raw;
    while (std::getline(is, raw)) {
      ++no;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.resize(hash);
      bool blank = std::all_of(raw.begin(), raw.end(), [](unsigned char c) {
        return std::isspace(c);
      });
      if (blank) continue;
      out = raw;
      line_no = no;
      return true;
    }
    return false;
  }

  std::istringstream is;
  int no = 0;
};

}  // namespace

std::string read_file(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw io_error("cannot open " + file);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot write " + file);
  out << content;
}

// ---------------------------------------------------------------------------
// actions

ground_action parse_ground_action(const std::string& text) {
  auto caret = text.find('^');
  auto lp = text.find('(', caret == std::string::npos ? 0 : caret);
  if (caret == std::string::npos || lp == std::string::npos ||
      text.back() != ')' || caret == 0 || lp == caret + 1)
    throw io_error("bad action '" + text + "', expected name^agent(args)");
  ground_action a;
  a.name = text.substr(0, caret);
  a.agent = text.substr(caret + 1, lp - caret - 1);
  std::string args = text.substr(lp + 1, text.size() - lp - 2);
  for (const auto& piece : split_commas(args))
    a.args.push_back(parse_int(piece, "action '" + text + "'"));
  return a;
}

joint_action parse_joint_action(const std::string& text,
                                const game_signature& sig) {
  joint_action d;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) d.push_back(parse_ground_action(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ';') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  flush();
  if (d.size() != sig.agents.size())
    throw io_error("joint action '" + text + "' has " +
                   std::to_string(d.size()) + " components, expected " +
                   std::to_string(sig.agents.size()));
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i].agent != sig.agents[i])
      throw io_error("joint action '" + text + "': component " +
                     std::to_string(i + 1) + " belongs to " + d[i].agent +
                     ", expected " + sig.agents[i]);
  return d;
}

std::vector<joint_action> parse_joint_actions_text(const std::string& text,
                                                   const game_signature& sig) {
  std::vector<joint_action> out;
  line_reader rd(text);
  std::string line;
  int no = 0;
  while (rd.next(line, no)) {
    try {
      out.push_back(parse_joint_action(line, sig));
    } catch (const io_error& e) {
      throw io_error("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<joint_action> load_joint_actions(const std::string& file,
                                             const game_signature& sig) {
  return parse_joint_actions_text(read_file(file), sig);
}

void save_joint_actions(const std::vector<joint_action>& joints,
                        const std::string& file) {
  std::ostringstream os;
  for (const auto& d : joints) os << joint_to_string(d) << '\n';
  write_file(file, os.str());
}

// ---------------------------------------------------------------------------
// model files

std::shared_ptr<extensional_model> parse_model_text(const std::string& text) {
  game_signature sig;
  struct state_line {
    std::string id;
    std::set<std::string> props;
    std::vector<std::int64_t> vals;
  };
  std::vector<state_line> states;
  std::string initial_id;
  std::vector<std::string> terminal_ids;
  std::vector<std::pair<std::string, std::string>> goal_ids;
  std::vector<std::pair<std::string, std::string>> legal_lines;
  struct update_line {
    std::string from, joint, to;
  };
  std::vector<update_line> update_lines;

  line_reader rd(text);
  std::string line;
  int no = 0;
  auto err = [&](const std::string& msg) -> io_error {
    return io_error("line " + std::to_string(no) + ": " + msg);
  };
  while (rd.next(line, no)) {
    auto toks = split_ws(line);
    const std::string& kw = toks[0];
    if (kw == "AGENTS") {
      sig.agents.assign(toks.begin() + 1, toks.end());
    } else if (kw == "VARS") {
      sig.vars.insert(sig.vars.end(), toks.begin() + 1, toks.end());
    } else if (kw == "PROPS") {
      sig.props.insert(toks.begin() + 1, toks.end());
    } else if (kw == "ACTIONS") {
      if (toks.size() < 2) throw err("ACTIONS needs an agent");
      for (std::size_t i = 2; i < toks.size(); ++i) {
        auto slash = toks[i].rfind('/');
        if (slash == std::string::npos)
          throw err("bad action schema '" + toks[i] + "', expected name/arity");
        sig.actions[toks[1]].push_back(
            {toks[i].substr(0, slash),
             static_cast<std::size_t>(parse_int(toks[i].substr(slash + 1),
                                                "action schema"))});
      }
    } else if (kw == "STATE") {
      if (toks.size() != 4) throw err("STATE needs <id> props=... vals=...");
      state_line s;
      s.id = toks[1];
      if (toks[2].rfind("props=", 0) != 0 || toks[3].rfind("vals=", 0) != 0)
        throw err("STATE needs props=<list> vals=<list>");
      for (const auto& p : split_commas(toks[2].substr(6))) s.props.insert(p);
      for (const auto& v : split_commas(toks[3].substr(5)))
        s.vals.push_back(parse_int(v, "STATE vals"));
      states.push_back(std::move(s));
    } else if (kw == "INITIAL") {
      if (toks.size() != 2) throw err("INITIAL needs one state id");
      initial_id = toks[1];
    } else if (kw == "TERMINAL") {
      terminal_ids.insert(terminal_ids.end(), toks.begin() + 1, toks.end());
    } else if (kw == "GOAL") {
      if (toks.size() < 2) throw err("GOAL needs an agent");
      for (std::size_t i = 2; i < toks.size(); ++i)
        goal_ids.emplace_back(toks[1], toks[i]);
    } else if (kw == "LEGAL") {
      if (toks.size() != 3) throw err("LEGAL needs <state> <action>");
      legal_lines.emplace_back(toks[1], toks[2]);
    } else if (kw == "UPDATE") {
      // UPDATE <state> (<a1>;<a2>;...) -> <state>
      auto kwpos = line.find("UPDATE");
      auto lp = line.find('(');
      auto rp = line.rfind(')');
      auto arrow = line.rfind("->");
      if (lp == std::string::npos || rp == std::string::npos ||
          arrow == std::string::npos || arrow < rp)
        throw err("UPDATE needs <state> (<joint>) -> <state>");
      update_line u;
      {
        std::istringstream head(line.substr(kwpos + 6, lp - kwpos - 6));
        head >> u.from;
      }
      u.joint = line.substr(lp + 1, rp - lp - 1);
      std::istringstream tail(line.substr(arrow + 2));
      tail >> u.to;
      if (u.from.empty() || u.to.empty()) throw err("UPDATE is missing a state");
      update_lines.push_back(std::move(u));
    } else {
      throw err("unknown section '" + kw + "'");
    }
  }

  if (sig.agents.empty()) throw io_error("model has no AGENTS section");

  // Collect action schemas mentioned by legality/update lines.
  auto note_action = [&](const ground_action& a) {
    if (!sig.has_agent(a.agent))
      throw io_error("action " + a.to_string() + " names unknown agent " +
                     a.agent);
    if (!sig.find_schema(a.agent, a.name))
      sig.actions[a.agent].push_back({a.name, a.args.size()});
  };
  std::vector<std::pair<std::string, ground_action>> legal_parsed;
  for (const auto& [sid, text_action] : legal_lines) {
    ground_action a = parse_ground_action(text_action);
    note_action(a);
    legal_parsed.emplace_back(sid, std::move(a));
  }
  struct update_parsed {
    std::string from, to;
    joint_action d;
  };
  std::vector<update_parsed> updates;
  for (const auto& u : update_lines) {
    update_parsed up;
    up.from = u.from;
    up.to = u.to;
    std::string cur;
    for (char c : u.joint) {
      if (c == ';') {
        up.d.push_back(parse_ground_action(cur));
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    if (!cur.empty()) up.d.push_back(parse_ground_action(cur));
    for (const auto& a : up.d) note_action(a);
    updates.push_back(std::move(up));
  }

  auto model = std::make_shared<extensional_model>(sig);
  for (auto& s : states) {
    for (const auto& p : s.props)
      if (!sig.props.count(p))
        throw io_error("state " + s.id + " uses undeclared proposition " + p);
    model->add_state(s.id, std::move(s.props), std::move(s.vals));
  }
  auto resolve = [&](const std::string& id) {
    auto w = model->find_state(id);
    if (!w) throw io_error("unknown state id '" + id + "'");
    return *w;
  };
  if (initial_id.empty()) throw io_error("model has no INITIAL state");
  model->set_initial(resolve(initial_id));
  for (const auto& id : terminal_ids) model->mark_terminal(resolve(id));
  for (const auto& [agent, id] : goal_ids) {
    if (!sig.has_agent(agent))
      throw io_error("GOAL names unknown agent " + agent);
    model->add_goal(agent, resolve(id));
  }
  for (auto& [sid, a] : legal_parsed) model->add_legal(resolve(sid), std::move(a));
  for (auto& u : updates)
    model->add_update(resolve(u.from), std::move(u.d), resolve(u.to));
  return model;
}

std::string model_to_text(const extensional_model& m) {
  const game_signature& sig = m.signature();
  std::ostringstream os;
  os << "AGENTS";
  for (const auto& r : sig.agents) os << ' ' << r;
  os << '\n';
  if (!sig.vars.empty()) {
    os << "VARS";
    for (const auto& x : sig.vars) os << ' ' << x;
    os << '\n';
  }
  {
    std::size_t per_line = 0;
    for (const auto& p : sig.props) {
      if (per_line == 0) os << "PROPS";
      os << ' ' << p;
      if (++per_line == 8) {
        os << '\n';
        per_line = 0;
      }
    }
    if (per_line) os << '\n';
  }
  for (const auto& r : sig.agents) {
    auto it = sig.actions.find(r);
    if (it == sig.actions.end() || it->second.empty()) continue;
    auto schemas = it->second;
    std::sort(schemas.begin(), schemas.end(),
              [](const action_schema& a, const action_schema& b) {
                return std::tie(a.name, a.arity) < std::tie(b.name, b.arity);
              });
    os << "ACTIONS " << r;
    for (const auto& s : schemas) os << ' ' << s.name << '/' << s.arity;
    os << '\n';
  }

  std::vector<state_id> order(m.state_count());
  for (state_id w = 0; w < m.state_count(); ++w) order[w] = w;
  std::sort(order.begin(), order.end(), [&](state_id a, state_id b) {
    return m.state_name(a) < m.state_name(b);
  });
  for (state_id w : order) {
    os << "STATE " << m.state_name(w) << " props=";
    bool first = true;
    for (const auto& p : m.props_at(w)) {
      if (!first) os << ',';
      os << p;
      first = false;
    }
    os << " vals=";
    const auto& vs = m.vals_at(w);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) os << ',';
      os << vs[i];
    }
    os << '\n';
  }
  os << "INITIAL " << m.state_name(m.initial_state()) << '\n';
  {
    std::vector<std::string> ids;
    for (state_id w : m.terminal_states()) ids.push_back(m.state_name(w));
    std::sort(ids.begin(), ids.end());
    for (const auto& id : ids) os << "TERMINAL " << id << '\n';
  }
  for (const auto& r : sig.agents) {
    const auto& ws = m.goal_states(r);
    if (ws.empty()) continue;
    std::vector<std::string> ids;
    for (state_id w : ws) ids.push_back(m.state_name(w));
    std::sort(ids.begin(), ids.end());
    os << "GOAL " << r;
    for (const auto& id : ids) os << ' ' << id;
    os << '\n';
  }
  {
    std::vector<std::pair<std::string, std::string>> lines;
    for (const auto& [w, as] : m.legality())
      for (const auto& a : as)
        lines.emplace_back(m.state_name(w), a.to_string());
    std::sort(lines.begin(), lines.end());
    for (const auto& [sid, act] : lines)
      os << "LEGAL " << sid << ' ' << act << '\n';
  }
  {
    std::vector<std::string> lines;
    for (const auto& [key, succ] : m.updates()) {
      std::ostringstream ls;
      ls << "UPDATE " << m.state_name(key.first) << " ("
         << joint_to_string(key.second) << ") -> " << m.state_name(succ);
      lines.push_back(ls.str());
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) os << l << '\n';
  }
  return os.str();
}

std::shared_ptr<extensional_model> load_model(const std::string& file) {
  try {
    return parse_model_text(read_file(file));
  } catch (const io_error& e) {
    throw io_error(file + ": " + e.what());
  }
}

void save_model(const extensional_model& m, const std::string& file) {
  write_file(file, model_to_text(m));
}

// ---------------------------------------------------------------------------
// rule files

rule_set load_rules(const std::string& file) {
  rule_set rs;
  rs.name = file;
  try {
    for (const auto& f : parse_rules_text(read_file(file)))
      rs.rules.push_back(desugar(f));
  } catch (const parse_error& e) {
    throw io_error(file + ": " + e.what());
  }
  return rs;
}

void save_rules(const rule_set& rs, const std::string& file) {
  std::ostringstream os;
  for (const auto& f : rs.rules) os << f.to_string() << '\n';
  write_file(file, os.str());
}

}  // namespace gdlz
