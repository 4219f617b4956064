#include <algorithm>
#include <cmath>
#include <sstream>

#include "invstab/chambers.hpp"

namespace invstab {

namespace {

constexpr double kSize = 480.0;
constexpr double kCenter = kSize / 2.0;
constexpr double kRadius = 180.0;

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string header() {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n";
  return os.str();
}

void line(std::ostringstream& os, double x1, double y1, double x2, double y2, const char* stroke, double width,
          const char* dash = nullptr) {
  os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\"" << stroke
     << "\" stroke-width=\"" << width << "\"";
  if (dash != nullptr) os << " stroke-dasharray=\"" << dash << "\"";
  os << "/>\n";
}

void text(std::ostringstream& os, double x, double y, const std::string& s, int size = 10) {
  os << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"sans-serif\" font-size=\"" << size << "\">"
     << xml_escape(s) << "</text>\n";
}

}  // namespace

std::string render_charge_diagram(const ChamberPoint& p, int n_max) {
  const auto catalog = stable_catalog(p, n_max);
  const CentralCharge Z = NormalizedCharge{p.x}.charge();

  struct Ray {
    double re, im;
    std::string label;
    bool highlight;
  };
  std::vector<Ray> rays;
  for (const auto& e : catalog) {
    const ExactComplex z = evaluate(Z, e.kclass);
    rays.push_back(Ray{z.re.get_d(), z.im.get_d(), e.label.str(), false});
  }
  const ExactComplex zd = evaluate(Z, delta());
  rays.push_back(Ray{zd.re.get_d(), zd.im.get_d(), "O_x (delta)", true});

  double extent = 0;
  for (const Ray& r : rays) extent = std::max(extent, std::hypot(r.re, r.im));
  const double scale = extent > 0 ? kRadius / extent : 1.0;

  std::ostringstream os;
  os << header();
  line(os, 20, kCenter, kSize - 20, kCenter, "#999999", 1);
  line(os, kCenter, 20, kCenter, kSize - 20, "#999999", 1);
  text(os, 12, 16, "Z for sheet " + p.word.str() + ", x = " + p.x.str() + " (" + p.region().str() + ")", 11);
  for (const Ray& r : rays) {
    const double ex = kCenter + scale * r.re;
    const double ey = kCenter - scale * r.im;
    line(os, kCenter, kCenter, ex, ey, r.highlight ? "#cc2222" : "#2255aa", r.highlight ? 2.0 : 1.2);
    text(os, ex + 3, ey - 3, r.label, 9);
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_arrangement(int n_max) {
  const auto lines = arrangement_lines(n_max);
  std::ostringstream os;
  os << header();
  // Horizontal axis Z(gamma_1) = Z(gamma_3), vertical axis Z(gamma_0) = Z(gamma_2).
  line(os, 20, kCenter, kSize - 20, kCenter, "#999999", 0.8, "4 3");
  line(os, kCenter, 20, kCenter, kSize - 20, "#999999", 0.8, "4 3");
  text(os, kSize - 150, kCenter - 8, "Z(γ₁) = Z(γ₃)", 11);
  text(os, kCenter + 8, 30, "Z(γ₀) = Z(γ₂)", 11);
  for (const auto& [c0, c1] : lines) {
    // c0 Z(gamma_0) + c1 Z(gamma_1) = 0 has direction (h, v) = (c0, -c1).
    const double h = c0;
    const double v = -c1;
    const double norm = std::hypot(h, v);
    const double dx = kRadius * 1.15 * h / norm;
    const double dy = kRadius * 1.15 * v / norm;
    line(os, kCenter - dx, kCenter + dy, kCenter + dx, kCenter - dy, "#222222", 1.2);
    std::ostringstream name;
    name << c0 << "Z(γ₀)+" << c1 << "Z(γ₁)=0";
    text(os, kCenter + dx + 2, kCenter - dy, name.str(), 8);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace invstab
