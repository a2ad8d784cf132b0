#include "idealis/io/svg.hpp"

namespace idealis {

RenderWindow RenderWindow::parse(std::string_view text) {
  std::vector<Rational> v;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    v.push_back(Rational::parse(text.substr(start, end - start)));
    start = end + 1;
  }
  if (v.size() != 4) throw ParseError("window must be x0,x1,y0,y1");
  RenderWindow w{v[0], v[1], v[2], v[3]};
  if (!(w.x0 < w.x1) || !(w.y0 < w.y1)) throw ParseError("window bounds must satisfy x0 < x1 and y0 < y1");
  return w;
}

}  // namespace idealis
