#include "mcs/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mcs {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void syntax(const std::string& msg) { throw Error(ErrorCode::SyntaxError, msg); }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line number
    std::size_t line = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i < end; ++i)
      if (text[i] == '\n') ++line;
    syntax("line " + std::to_string(line) + ": " + e.what());
  }
}

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) syntax(where + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) syntax(where + ": missing field \"" + name + "\"");
  return *it;
}

template <typename T>
T integer(const json& obj, const char* name, const std::string& where) {
  const json& v = field(obj, name, where);
  if (!v.is_number_integer()) syntax(where + ": field \"" + name + "\" must be an integer");
  return v.get<T>();
}

std::vector<Time> int_array(const json& obj, const char* name, const std::string& where) {
  const json& v = field(obj, name, where);
  if (!v.is_array()) syntax(where + ": field \"" + name + "\" must be an array");
  std::vector<Time> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number_integer()) syntax(where + ": field \"" + name + "\" must hold integers");
    out.push_back(e.get<Time>());
  }
  return out;
}

}  // namespace

TasksetDocument parse_taskset(const std::string& text) {
  const json doc = parse_json(text);
  TasksetDocument out;
  out.tasks.levels = integer<Level>(doc, "criticality_levels", "taskset");
  out.platform.processors = integer<int>(doc, "processors", "taskset");
  const json& tasks = field(doc, "tasks", "taskset");
  if (!tasks.is_array()) syntax("taskset: field \"tasks\" must be an array");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string where = "tasks[" + std::to_string(i) + "]";
    MCTask t;
    t.id = integer<TaskId>(tasks[i], "id", where);
    t.period = integer<Time>(tasks[i], "T", where);
    t.deadline = integer<Time>(tasks[i], "D", where);
    t.criticality = integer<Level>(tasks[i], "L", where);
    t.wcet = int_array(tasks[i], "C", where);
    out.tasks.tasks.push_back(std::move(t));
  }
  out.tasks = validate_taskset(out.tasks, out.platform);
  return out;
}

std::string serialize_taskset(const TasksetDocument& doc) {
  ordered_json j;
  j["criticality_levels"] = doc.tasks.levels;
  j["processors"] = doc.platform.processors;
  j["tasks"] = ordered_json::array();
  for (const auto& t : doc.tasks.tasks) {
    ordered_json tj;
    tj["id"] = t.id;
    tj["T"] = t.period;
    tj["D"] = t.deadline;
    tj["L"] = t.criticality;
    tj["C"] = t.wcet;
    j["tasks"].push_back(std::move(tj));
  }
  return j.dump(2) + "\n";
}

Scenario parse_scenario_unchecked(const std::string& text) {
  const json doc = parse_json(text);
  Scenario sc;
  sc.horizon = integer<Time>(doc, "horizon", "scenario");
  const json& tasks = field(doc, "tasks", "scenario");
  if (!tasks.is_object()) syntax("scenario: field \"tasks\" must be an object keyed by task id");
  for (const auto& [key, value] : tasks.items()) {
    TaskId id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      syntax("scenario.tasks: key \"" + key + "\" is not an integer task id");
    }
    const std::string where = "scenario.tasks[" + key + "]";
    TaskArrivals ta;
    ta.arrivals = int_array(value, "arrivals", where);
    ta.exec_times = int_array(value, "exec_times", where);
    sc.tasks[id] = std::move(ta);
  }
  if (auto it = doc.find("dmcr_requests"); it != doc.end()) {
    if (!it->is_array()) syntax("scenario: field \"dmcr_requests\" must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "dmcr_requests[" + std::to_string(i) + "]";
      sc.dmcr_requests.push_back({integer<Time>((*it)[i], "time", where),
                                  integer<Level>((*it)[i], "target_level", where)});
    }
  }
  return sc;
}

Scenario parse_scenario(const std::string& text, const TaskSet& ts) {
  Scenario sc = parse_scenario_unchecked(text);
  validate_scenario(sc, ts);
  return sc;
}

std::string serialize_scenario(const Scenario& sc) {
  ordered_json j;
  j["horizon"] = sc.horizon;
  j["tasks"] = ordered_json::object();
  for (const auto& [id, ta] : sc.tasks) {
    ordered_json tj;
    tj["arrivals"] = ta.arrivals;
    tj["exec_times"] = ta.exec_times;
    j["tasks"][std::to_string(id)] = std::move(tj);
  }
  j["dmcr_requests"] = ordered_json::array();
  for (const auto& r : sc.dmcr_requests) {
    ordered_json rj;
    rj["time"] = r.time;
    rj["target_level"] = r.target;
    j["dmcr_requests"].push_back(std::move(rj));
  }
  return j.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace mcs
