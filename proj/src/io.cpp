#include "twistdec/io.hpp"

#include <fstream>
#include <sstream>

#include "twistdec/subsets.hpp"

namespace twistdec {

namespace {

// Content lines with comments and blanks stripped, keeping order.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, const std::string& where) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer in " + where + ", got '" + tok +
                     "'");
  }
}

std::vector<int> parse_point_line(const std::string& line, const std::string& where) {
  std::vector<int> pts;
  for (const auto& tok : split_ws(line)) pts.push_back(parse_int(tok, where));
  return pts;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << content;
  if (!out) throw ParseError("short write to " + path.string());
}

PermutationGroup parse_group_file(const std::filesystem::path& path) {
  auto lines = content_lines(read_text_file(path));
  int degree = -1;
  std::string name;
  std::vector<Permutation> gens;
  for (const auto& line : lines) {
    auto toks = split_ws(line);
    if (toks[0] == "degree") {
      if (toks.size() != 2)
        throw ParseError(path.string() + ": malformed degree line");
      degree = parse_int(toks[1], path.string());
      if (degree < 1) throw ParseError(path.string() + ": degree must be >= 1");
    } else if (toks[0] == "name") {
      if (toks.size() != 2)
        throw ParseError(path.string() + ": name must be a single token");
      name = toks[1];
    } else if (toks[0] == "gen") {
      if (degree < 0)
        throw ParseError(path.string() + ": gen before degree");
      std::string rest = line.substr(3);
      gens.push_back(Permutation::parse(rest, degree));
    } else {
      throw ParseError(path.string() + ": unknown directive '" + toks[0] +
                       "'");
    }
  }
  if (degree < 0) throw ParseError(path.string() + ": missing degree");
  if (name.empty()) throw ParseError(path.string() + ": missing name");
  if (gens.empty()) throw ParseError(path.string() + ": no generators");
  return PermutationGroup(name, degree, std::move(gens));
}

TwistedCode parse_tuple_file(const std::filesystem::path& path,
                             uint64_t budget) {
  auto lines = content_lines(read_text_file(path));
  auto dir = path.parent_path();
  std::string name;
  int lambda = -1;
  std::vector<std::filesystem::path> comp_paths;
  std::vector<std::vector<std::string>> map_lines;  // per map block
  std::vector<int> map_comp;
  // psi lines are kept as raw text until the degree is known
  std::vector<std::pair<int, std::string>> psi_texts;

  size_t i = 0;
  while (i < lines.size()) {
    auto toks = split_ws(lines[i]);
    if (toks[0] == "tuple" && toks.size() == 2) {
      name = toks[1];
      ++i;
    } else if (toks[0] == "lambda" && toks.size() == 2) {
      lambda = parse_int(toks[1], path.string());
      ++i;
    } else if (toks[0] == "component" && toks.size() == 2) {
      comp_paths.push_back(dir / toks[1]);
      ++i;
    } else if (toks[0] == "map" && toks.size() == 2) {
      map_comp.push_back(parse_int(toks[1], path.string()));
      std::vector<std::string> body;
      ++i;
      while (i < lines.size() && lines[i] != "endmap") body.push_back(lines[i++]);
      if (i == lines.size())
        throw ParseError(path.string() + ": map block without endmap");
      ++i;  // endmap
      map_lines.push_back(std::move(body));
    } else if (toks[0] == "psi" && toks.size() >= 3) {
      int comp = parse_int(toks[1], path.string());
      size_t at = lines[i].find(toks[1], 3);
      psi_texts.emplace_back(comp, lines[i].substr(at + toks[1].size()));
      ++i;
    } else {
      throw ParseError(path.string() + ": unrecognized line '" + lines[i] +
                       "'");
    }
  }
  if (name.empty()) throw ParseError(path.string() + ": missing tuple name");
  if (lambda < 2) throw ParseError(path.string() + ": lambda must be >= 2");
  if (static_cast<int>(comp_paths.size()) != lambda)
    throw ParseError(path.string() + ": expected " + std::to_string(lambda) +
                     " component lines, got " +
                     std::to_string(comp_paths.size()));
  if (static_cast<int>(map_lines.size()) != lambda - 1)
    throw ParseError(path.string() + ": expected " +
                     std::to_string(lambda - 1) + " map blocks");

  PermutationGroup g1 = parse_group_file(comp_paths[0]);
  const int n = g1.degree();
  std::vector<ComponentMap> maps;
  for (int c = 2; c <= lambda; ++c) {
    int pos = -1;
    for (size_t j = 0; j < map_comp.size(); ++j)
      if (map_comp[j] == c) pos = static_cast<int>(j);
    if (pos < 0)
      throw ParseError(path.string() + ": missing map block for component " +
                       std::to_string(c));
    ComponentMap m;
    for (const auto& body : map_lines[pos])
      m.gen_images.push_back(Permutation::parse(body, n));
    if (m.gen_images.size() != g1.generators().size())
      throw ParseError(path.string() + ": map " + std::to_string(c) +
                       " lists " + std::to_string(m.gen_images.size()) +
                       " images for " +
                       std::to_string(g1.generators().size()) +
                       " generators");
    // component files must list exactly the map images, in order
    PermutationGroup gc = parse_group_file(comp_paths[c - 1]);
    if (gc.degree() != n)
      throw ParseError(comp_paths[c - 1].string() + ": degree mismatch");
    if (gc.generators() != m.gen_images)
      throw ParseError(comp_paths[c - 1].string() +
                       ": generators do not match the map block of " +
                       path.string());
    for (const auto& [comp, text] : psi_texts)
      if (comp == c) m.psi = Permutation::parse(text, n);
    maps.push_back(std::move(m));
  }
  return TwistedCode(name, std::move(g1), std::move(maps), budget);
}

Ubb parse_ubb_file(const std::filesystem::path& path) {
  auto lines = content_lines(read_text_file(path));
  if (lines.empty()) throw ParseError(path.string() + ": empty ubb file");
  auto head = split_ws(lines[0]);
  if (head.size() != 4 || head[0] != "ubb" || head[2] != "strength")
    throw ParseError(path.string() +
                     ": header must be 'ubb <name> strength <r>'");
  Ubb out;
  out.group_name = head[1];
  out.strength = parse_int(head[3], path.string());
  for (size_t i = 1; i < lines.size(); ++i)
    out.bases.push_back(parse_point_line(lines[i], path.string()));
  if (out.bases.empty()) throw ParseError(path.string() + ": no bases");
  return out;
}

CoveringDesign parse_cover_file(const std::filesystem::path& path,
                                bool validate_cover) {
  auto lines = content_lines(read_text_file(path));
  if (lines.empty()) throw ParseError(path.string() + ": empty cover file");
  auto head = split_ws(lines[0]);
  if (head.size() != 4 || head[0] != "cover")
    throw ParseError(path.string() + ": header must be 'cover <n> <k> <r>'");
  CoveringDesign d;
  d.n = parse_int(head[1], path.string());
  d.block_size = parse_int(head[2], path.string());
  d.strength = parse_int(head[3], path.string());
  if (d.n < 1 || d.block_size < 1 || d.block_size > d.n || d.strength < 0 ||
      d.strength > d.block_size)
    throw ParseError(path.string() + ": inconsistent cover header");
  for (size_t i = 1; i < lines.size(); ++i) {
    auto block = parse_point_line(lines[i], path.string());
    if (static_cast<int>(block.size()) != d.block_size)
      throw ParseError(path.string() + ": block on line with " +
                       std::to_string(block.size()) + " points, expected " +
                       std::to_string(d.block_size));
    std::vector<char> seen(d.n + 1, 0);
    for (int p : block) {
      if (p < 1 || p > d.n)
        throw ParseError(path.string() + ": point " + std::to_string(p) +
                         " out of range");
      if (seen[p]++)
        throw ParseError(path.string() + ": repeated point in block");
    }
    d.blocks.push_back(std::move(block));
  }
  if (d.blocks.empty()) throw ParseError(path.string() + ": no blocks");

  if (validate_cover && binomial(d.n, d.strength) <= kDefaultStrengthBudget) {
    std::vector<uint64_t> masks;
    for (const auto& b : d.blocks) masks.push_back(subset_mask(b));
    SubsetIter it(d.n, d.strength);
    do {
      uint64_t s = subset_mask(it.current());
      bool inside = false;
      for (uint64_t m : masks)
        if ((m & s) == s) {
          inside = true;
          break;
        }
      if (!inside) {
        std::string w;
        for (int p : it.current())
          w += (w.empty() ? "" : " ") + std::to_string(p);
        throw ParseError(path.string() + ": not a covering design; {" + w +
                         "} lies in no block");
      }
    } while (it.next());
  }
  return d;
}

std::string format_group_file(const std::string& name, int degree,
                              const std::vector<Permutation>& generators) {
  std::ostringstream out;
  out << "degree " << degree << "\n";
  out << "name " << name << "\n";
  for (const auto& g : generators) out << "gen " << g.to_cycles() << "\n";
  return out.str();
}

std::string format_ubb_file(const Ubb& ubb) {
  std::ostringstream out;
  out << "ubb " << ubb.group_name << " strength " << ubb.strength << "\n";
  for (const auto& b : ubb.bases) {
    for (size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << "\n";
  }
  return out.str();
}

std::string format_cover_file(const CoveringDesign& cover) {
  std::ostringstream out;
  out << "cover " << cover.n << " " << cover.block_size << " "
      << cover.strength << "\n";
  for (const auto& b : cover.blocks) {
    for (size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace twistdec
