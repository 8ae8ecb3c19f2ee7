#include "walkarea/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace walkarea {

using json = nlohmann::ordered_json;

std::string spectrum_to_json(const AreaSpectrum& s, int indent) {
  const auto& m = s.meta();
  json j;
  j["family"] = m.source;
  j["r"] = m.r;
  j["g"] = m.g;
  j["n"] = m.n;
  j["parts"] = m.parts;
  if (m.support) {
    j["support"] = {{"min", m.support->a_min},
                    {"max", m.support->a_max},
                    {"parity", m.support->parity},
                    {"step", m.support->step}};
  }
  j["entries"] = json::array();
  for (const auto& [a, c] : s.entries()) j["entries"].push_back({{"A", a}, {"count", c.get_str()}});
  return j.dump(indent);
}

AreaSpectrum spectrum_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    SpectrumMeta m;
    m.source = j.at("family").get<std::string>();
    m.r = j.at("r").get<int>();
    m.g = j.value("g", 0);
    m.n = j.value("n", 0);
    m.parts = j.value("parts", std::vector<int>{});
    if (j.contains("support")) {
      const auto& s = j["support"];
      m.support = AreaSupport{s.at("min").get<long>(), s.at("max").get<long>(), s.at("parity").get<int>(),
                              s.value("step", 2)};
    }
    AreaSpectrum out(std::move(m));
    for (const auto& e : j.at("entries")) {
      BigInt count;
      if (count.set_str(e.at("count").get<std::string>(), 10) != 0) {
        throw std::invalid_argument("bad count " + e.at("count").dump());
      }
      out.add(e.at("A").get<long>(), count);
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("spectrum json: ") + e.what());
  }
}

std::string spectrum_to_csv(const AreaSpectrum& s) {
  std::ostringstream os;
  os << "A,count\n";
  for (const auto& [a, c] : s.entries()) os << a << ',' << c.get_str() << '\n';
  return os.str();
}

std::string spectrum_to_text(const AreaSpectrum& s) {
  std::size_t width = 1;
  for (const auto& [a, c] : s.entries()) width = std::max(width, std::to_string(a).size());
  std::ostringstream os;
  for (const auto& [a, c] : s.entries()) {
    os << std::setw(static_cast<int>(width)) << a << "  " << c.get_str() << '\n';
  }
  os << "total " << s.total().get_str() << '\n';
  return os.str();
}

}  // namespace walkarea
