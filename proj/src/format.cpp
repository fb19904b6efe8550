#include "starsys/format.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace starsys {

parse_error::parse_error(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

struct line_ref {
  int number;
  std::string_view text;
};

// Non-blank, non-comment lines, split into systems at "---".
std::vector<std::vector<line_ref>> split_sections(std::string_view text) {
  std::vector<std::vector<line_ref>> sections(1);
  int number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    auto t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    if (t == "---") {
      sections.emplace_back();
      continue;
    }
    sections.back().push_back({number, t});
  }
  std::erase_if(sections, [](const auto& s) { return s.empty(); });
  return sections;
}

std::vector<int> parse_ints(std::string_view s, int line) {
  std::vector<int> out;
  const char* p = s.data();
  const char* end = s.data() + s.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == ',')) ++p;
    if (p == end) break;
    int v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{}) throw parse_error(line, "expected an integer near '" + std::string(p, end) + "'");
    out.push_back(v);
    p = next;
  }
  return out;
}

void parse_header(const line_ref& l, star_system& sys) {
  auto v = parse_ints(l.text, l.number);
  if (v.size() != 2) throw parse_error(l.number, "header must be 'n e'");
  sys.n = v[0];
  sys.e = v[1];
}

star parse_block(const line_ref& l, std::string_view body) {
  const auto colon = body.find(':');
  if (colon == std::string_view::npos) throw parse_error(l.number, "block must be 'root: p1 ... pe'");
  auto root = parse_ints(body.substr(0, colon), l.number);
  if (root.size() != 1) throw parse_error(l.number, "block must name exactly one root");
  return star(root[0], parse_ints(body.substr(colon + 1), l.number));
}

star_system parse_star_section(const std::vector<line_ref>& lines) {
  star_system sys;
  parse_header(lines.front(), sys);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].text.find('|') != std::string_view::npos)
      throw parse_error(lines[i].number, "coloured block line in a .star file");
    sys.blocks.push_back(parse_block(lines[i], lines[i].text));
  }
  return sys;
}

void write_block(std::ostream& os, const star& s) {
  os << s.root << ':';
  for (vertex p : s.pendants) os << ' ' << p;
  os << '\n';
}

}  // namespace

star_system parse_star(std::string_view text) {
  auto sections = split_sections(text);
  if (sections.empty()) throw parse_error(0, "empty input");
  if (sections.size() > 1) throw parse_error(sections[1].front().number, "more than one system");
  return parse_star_section(sections.front());
}

std::vector<star_system> parse_star_stream(std::string_view text) {
  std::vector<star_system> out;
  for (const auto& s : split_sections(text)) out.push_back(parse_star_section(s));
  return out;
}

coloured_star_system parse_cstar(std::string_view text) {
  auto sections = split_sections(text);
  if (sections.empty()) throw parse_error(0, "empty input");
  if (sections.size() > 1) throw parse_error(sections[1].front().number, "more than one system");
  const auto& lines = sections.front();

  coloured_star_system c;
  parse_header(lines.front(), c.system);
  std::map<std::string, std::size_t, std::less<>> by_label;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto bar = lines[i].text.find('|');
    if (bar == std::string_view::npos)
      throw parse_error(lines[i].number, "block line lacks 'label |'");
    auto label = std::string(trim(lines[i].text.substr(0, bar)));
    if (label.empty()) throw parse_error(lines[i].number, "empty colour label");
    auto [it, fresh] = by_label.try_emplace(label, c.classes.size());
    if (fresh) c.classes.push_back({label, {}});
    c.classes[it->second].members.push_back(c.system.blocks.size());
    c.system.blocks.push_back(parse_block(lines[i], lines[i].text.substr(bar + 1)));
  }
  return c;
}

bool looks_coloured(std::string_view text) {
  auto sections = split_sections(text);
  return !sections.empty() && sections.front().size() > 1 &&
         sections.front()[1].text.find('|') != std::string_view::npos;
}

std::string to_star(const star_system& sys) {
  std::ostringstream os;
  os << sys.n << ' ' << sys.e << '\n';
  for (const star& s : sys.blocks) write_block(os, s);
  return os.str();
}

std::string to_cstar(const coloured_star_system& c) {
  std::ostringstream os;
  os << c.system.n << ' ' << c.system.e << '\n';
  for (const auto& cls : c.classes)
    for (std::size_t m : cls.members) {
      os << cls.label << " | ";
      write_block(os, c.system.blocks.at(m));
    }
  return os.str();
}

void write_star_stream(std::ostream& os, const std::vector<star_system>& systems) {
  for (std::size_t i = 0; i < systems.size(); ++i) {
    if (i) os << "---\n";
    os << to_star(systems[i]);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace starsys
