#include "cli/svg.hpp"

#include <terrace/errors.hpp>
#include <terrace/projections.hpp>

#include <boost/multiprecision/gmp.hpp>

#include <sstream>

namespace terrace::cli {

namespace {

constexpr int kMarginLeft = 48;
constexpr int kMarginRight = 12;
constexpr int kMarginTop = 28;
constexpr int kMarginBottom = 56;

// Lengths in thousandths of a pixel.
using Milli = long long;

std::string px(Milli v) {
  const bool neg = v < 0;
  if (neg) v = -v;
  std::string frac = std::to_string(v % 1000);
  frac.insert(0, 3 - frac.size(), '0');
  return (neg ? "-" : "") + std::to_string(v / 1000) + "." + frac;
}

Milli round_milli(const Rational& v) {
  // Half away from zero; coordinates here are nonnegative.
  const auto& b = v.backend();
  using boost::multiprecision::mpz_int;
  const mpz_int num = boost::multiprecision::numerator(b);
  const mpz_int den = boost::multiprecision::denominator(b);
  mpz_int q = num / den;
  if (2 * (num % den) >= den) q += 1;
  return q.convert_to<Milli>();
}

class Layout {
 public:
  Layout(const FigureSpec& spec, std::size_t columns)
      : top_(Milli{kMarginTop} * 1000),
        plot_h_(Milli{spec.height_px - kMarginTop - kMarginBottom} * 1000),
        left_(Milli{kMarginLeft} * 1000),
        slot_(Milli{spec.width_px - kMarginLeft - kMarginRight} * 1000 / static_cast<Milli>(columns)),
        columns_(static_cast<Milli>(columns)) {}

  /// Vertical position of probability v; 1 at the top of the plot area.
  Milli y(const Rational& v) const { return top_ + round_milli((Rational(1) - v) * Rational(plot_h_)); }
  Milli slot_left(std::size_t k) const { return left_ + static_cast<Milli>(k) * slot_; }
  Milli slot() const { return slot_; }
  Milli left() const { return left_; }
  Milli right() const { return left_ + slot_ * columns_; }

 private:
  Milli top_;
  Milli plot_h_;
  Milli left_;
  Milli slot_;
  Milli columns_;
};

}  // namespace

std::string render_figure(const MarginalSet& m, const FigureSpec& spec) {
  const std::size_t n = m.size();
  if (n > kMaxFigureEvents) {
    throw Error(ErrorCode::TooLarge, "figures support at most " + std::to_string(kMaxFigureEvents) +
                                         " events, got " + std::to_string(n));
  }
  if (spec.width_px < kMarginLeft + kMarginRight + 16 || spec.height_px < kMarginTop + kMarginBottom + 16) {
    throw Error(ErrorCode::IndexOutOfRange, "figure dimensions are too small");
  }
  const auto bounds = boundary_distributions(m);
  const auto star = independent_epd(m);
  const std::size_t cells = power_set_size(n);

  const Layout layout(spec, cells);
  const Milli bar_w = layout.slot() * 3 / 5;
  const Milli bar_off = (layout.slot() - bar_w) / 2;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width_px << "\" height=\""
     << spec.height_px << "\" viewBox=\"0 0 " << spec.width_px << ' ' << spec.height_px << "\">\n"
     << "<style type=\"text/css\"><![CDATA[\n"
     << "  .blue { fill: #2f5fd0; }\n"
     << "  .red { fill: #d0302f; }\n"
     << "  .grid { stroke: #808080; stroke-width: 0.6; stroke-dasharray: 2,3; }\n"
     << "  .axis { stroke: #000000; stroke-width: 0.8; }\n"
     << "  text { font-family: monospace; font-size: 10px; }\n"
     << "]]></style>\n";

  os << "<text class=\"caption\" x=\"" << kMarginLeft << "\" y=\"16\">p = {";
  for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << m.prob(i).to_decimal(6);
  os << "}</text>\n";

  static const Rational quarters[] = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  for (const auto& q : quarters) {
    const Milli gy = layout.y(q);
    os << "<line class=\"grid\" x1=\"" << px(layout.left()) << "\" y1=\"" << px(gy) << "\" x2=\""
       << px(layout.right()) << "\" y2=\"" << px(gy) << "\"/>\n"
       << "<text class=\"tick\" x=\"" << px(layout.left() - 6000) << "\" y=\"" << px(gy + 3000)
       << "\" text-anchor=\"end\">" << q.to_decimal(2) << "</text>\n";
  }
  os << "<line class=\"axis\" x1=\"" << px(layout.left()) << "\" y1=\"" << px(layout.y(Rational(1)))
     << "\" x2=\"" << px(layout.left()) << "\" y2=\"" << px(layout.y(Rational(0))) << "\"/>\n";

  for (auto x : subset_iter(n)) {
    const std::string name = indicator_string(x, n);
    const Milli xl = layout.slot_left(x.bits) + bar_off;
    const Milli y_lower = layout.y(bounds.lower[x]);
    const Milli y_star = layout.y(star[x]);
    const Milli y_upper = layout.y(bounds.upper[x]);

    os << "<g id=\"subset-" << name << "\">\n"
       << "  <rect class=\"red\" x=\"" << px(xl) << "\" y=\"" << px(y_star) << "\" width=\"" << px(bar_w)
       << "\" height=\"" << px(y_lower - y_star) << "\"/>\n"
       << "  <rect class=\"blue\" x=\"" << px(xl) << "\" y=\"" << px(y_upper) << "\" width=\"" << px(bar_w)
       << "\" height=\"" << px(y_star - y_upper) << "\"/>\n";
    const Milli tx = xl + bar_w / 2 + 3000;
    const Milli ty = layout.y(Rational(0)) + 6000;
    os << "  <text class=\"subset\" x=\"" << px(tx) << "\" y=\"" << px(ty) << "\" transform=\"rotate(90 "
       << px(tx) << ' ' << px(ty) << ")\">" << name << "</text>\n"
       << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace terrace::cli
