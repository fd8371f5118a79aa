#pragma once

#include <algorithm>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "parkinglot/csv.hpp"

namespace parkinglot {

// Tiny scatter/line plot writer; enough for the optional figure analogues.
class SvgPlot {
 public:
  SvgPlot(double x_lo, double x_hi, double y_lo, double y_hi, int width = 640,
          int height = 420)
      : x_lo_(x_lo), x_hi_(x_hi), y_lo_(y_lo), y_hi_(y_hi), width_(width),
        height_(height) {}

  void polyline(const std::vector<std::pair<double, double>>& pts,
                const std::string& color) {
    if (pts.empty()) return;
    std::string d;
    for (const auto& [x, y] : pts) {
      d += d.empty() ? "M" : " L";
      d += fmt12(px(x)) + " " + fmt12(py(y));
    }
    body_ += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.5\"/>\n";
  }

  void points(const std::vector<std::pair<double, double>>& pts,
              const std::string& color) {
    for (const auto& [x, y] : pts)
      body_ += "<circle cx=\"" + fmt12(px(x)) + "\" cy=\"" + fmt12(py(y)) +
               "\" r=\"2\" fill=\"" + color + "\"/>\n";
  }

  void hline(double y, const std::string& color) {
    polyline({{x_lo_, y}, {x_hi_, y}}, color);
  }

  bool write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_
        << "\" height=\"" << height_ << "\">\n<rect width=\"100%\" "
        << "height=\"100%\" fill=\"white\"/>\n"
        << body_ << "</svg>\n";
    return out.good();
  }

 private:
  double px(double x) const {
    return margin_ + (x - x_lo_) / (x_hi_ - x_lo_) * (width_ - 2 * margin_);
  }
  double py(double y) const {
    return height_ - margin_ -
           (y - y_lo_) / (y_hi_ - y_lo_) * (height_ - 2 * margin_);
  }

  double x_lo_, x_hi_, y_lo_, y_hi_;
  int width_, height_;
  static constexpr double margin_ = 30.0;
  std::string body_;
};

}  // namespace parkinglot
