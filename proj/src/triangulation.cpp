#include "nsk/triangulation.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "nsk/error.hpp"
#include "text_lines.hpp"

namespace nsk {

namespace {

std::string where(std::size_t tet, int face) {
  return "tet " + std::to_string(tet) + " face " + std::to_string(face);
}

}  // namespace

Triangulation::Triangulation(std::vector<Row> gluings) : gluings_(std::move(gluings)) {
  if (gluings_.empty()) throw Error(ErrorKind::InvalidGluing, "triangulation has no tetrahedra");
  const std::size_t t = gluings_.size();
  for (std::size_t a = 0; a < t; ++a) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = gluing(a, f);
      if (g.tet >= t)
        throw Error(ErrorKind::InvalidGluing,
                    where(a, f) + ": target tetrahedron " + std::to_string(g.tet) + " out of range");
      const int target_face = g.perm[f];
      if (g.tet == a && target_face == f)
        throw Error(ErrorKind::InvalidGluing, where(a, f) + ": face glued to itself");
      // p(f) is the target face, so the other three vertices land on its vertices.
      const FaceGluing& back = gluing(g.tet, target_face);
      if (back.tet != a || back.perm != g.perm.inverse())
        throw Error(ErrorKind::InvalidGluing,
                    where(a, f) + " maps to " + where(g.tet, target_face) + " but the inverse record is missing");
    }
  }
}

std::vector<FaceRef> Triangulation::face_orbit_representatives() const {
  std::vector<FaceRef> reps;
  reps.reserve(2 * size());
  for (std::size_t a = 0; a < size(); ++a)
    for (int f = 0; f < 4; ++f) {
      FaceRef self{a, f};
      if (self < partner(a, f)) reps.push_back(self);
    }
  return reps;
}

Triangulation parse_triangulation(std::string_view text) {
  detail::LineReader reader(text);
  std::size_t count = 0;
  {
    auto line = reader.next();
    if (!line) throw Error(ErrorKind::Syntax, "empty input, expected 'tets N'");
    auto words = detail::split_words(line->text);
    if (words.size() != 2 || words[0] != "tets")
      throw Error(ErrorKind::Syntax, "expected 'tets N'", line->number);
    count = detail::parse_size(words[1], line->number);
    if (count == 0) throw Error(ErrorKind::Syntax, "tetrahedron count must be positive", line->number);
  }

  std::vector<Triangulation::Row> rows;
  rows.reserve(count);
  for (std::size_t a = 0; a < count; ++a) {
    auto line = reader.next();
    if (!line)
      throw Error(ErrorKind::Syntax,
                  "expected " + std::to_string(count) + " tetrahedron lines, found " + std::to_string(a));
    auto words = detail::split_words(line->text);
    if (words.size() != 4)
      throw Error(ErrorKind::Syntax, "expected 4 face records, found " + std::to_string(words.size()),
                  line->number);
    Triangulation::Row row;
    for (int f = 0; f < 4; ++f) {
      std::string_view rec = words[static_cast<std::size_t>(f)];
      if (rec == "-")
        throw Error(ErrorKind::UngluedFace, where(a, f) + " is unglued (boundary is not supported)",
                    line->number);
      auto colon = rec.find(':');
      if (colon == std::string_view::npos)
        throw Error(ErrorKind::Syntax, "record '" + std::string(rec) + "' is not of the form j:abcd", line->number);
      std::size_t target = detail::parse_size(rec.substr(0, colon), line->number);
      if (target >= count)
        throw Error(ErrorKind::InvalidGluing,
                    where(a, f) + ": target tetrahedron " + std::to_string(target) + " out of range",
                    line->number);
      Perm4 perm;
      try {
        perm = Perm4::parse(rec.substr(colon + 1));
      } catch (const Error& e) {
        throw Error(ErrorKind::Syntax, e.what(), line->number);
      }
      row[static_cast<std::size_t>(f)] = FaceGluing{target, perm};
    }
    rows.push_back(row);
  }
  if (auto extra = reader.next())
    throw Error(ErrorKind::Syntax, "unexpected data after the last tetrahedron", extra->number);
  return Triangulation(std::move(rows));
}

std::string serialize(const Triangulation& tri) {
  std::ostringstream out;
  out << "tets " << tri.size() << '\n';
  for (std::size_t a = 0; a < tri.size(); ++a) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(a, f);
      out << (f ? " " : "") << g.tet << ':' << g.perm.str();
    }
    out << '\n';
  }
  return out.str();
}

Triangulation load_triangulation(const std::string& path) {
  return parse_triangulation(detail::read_file(path));
}

}  // namespace nsk
