#include "ringcover/io.hpp"

#include <json.hpp>
#include <sstream>

#include "ringcover/errors.hpp"

namespace ringcover {

namespace {

using ojson = nlohmann::ordered_json;

const char* const kInvariantNames[kMemberClassCount] = {"sigma_add", "sigma", "eta_left",
                                                        "eta_right", "eta"};

ojson ext_to_json(ExtNat v) {
  if (v.is_inf()) return "inf";
  return v.value();
}

ExtNat ext_from_json(const ojson& j, const std::string& field) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtNat::inf();
  if (j.is_number_unsigned()) return ExtNat(j.get<std::uint64_t>());
  throw ParseError("field '" + field + "' must be a nonnegative integer or \"inf\"");
}

ojson shape_to_json(const AbelianGroupShape& shape) {
  ojson arr = ojson::array();
  for (std::uint32_t m : shape.orders()) arr.push_back(m);
  return arr;
}

ojson presentation_to_json(const RingPresentation& p) {
  const std::size_t k = p.shape.rank();
  ojson products = ojson::array();
  for (std::size_t i = 0; i < k; ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < k; ++j) {
      ojson entry = ojson::array();
      for (std::uint32_t c : p.products[i * k + j]) entry.push_back(c);
      row.push_back(std::move(entry));
    }
    products.push_back(std::move(row));
  }
  ojson doc;
  doc["orders"] = shape_to_json(p.shape);
  doc["products"] = std::move(products);
  return doc;
}

ojson witness_to_json(const CoverResult& cover) {
  if (cover.value.is_inf()) return nullptr;
  ojson arr = ojson::array();
  for (const SubsetMask& member : cover.witness) {
    ojson elems = ojson::array();
    for (elem_t e : member.elements()) elems.push_back(e);
    arr.push_back(std::move(elems));
  }
  return arr;
}

std::string witness_text(const CoverResult& cover) {
  std::ostringstream out;
  bool first_member = true;
  for (const SubsetMask& member : cover.witness) {
    out << (first_member ? "{" : " {");
    first_member = false;
    bool first = true;
    for (elem_t e : member.elements()) {
      out << (first ? "" : ",") << e;
      first = false;
    }
    out << "}";
  }
  return out.str();
}

ojson profile_to_json(const CoveringProfile& p) {
  ojson doc;
  doc["sigma_add"] = ext_to_json(p.sigma_add);
  doc["sigma"] = ext_to_json(p.sigma);
  doc["eta_left"] = ext_to_json(p.eta_left);
  doc["eta_right"] = ext_to_json(p.eta_right);
  doc["eta"] = ext_to_json(p.eta);
  return doc;
}

std::string shape_text(const AbelianGroupShape& shape) {
  std::string s = "(";
  for (std::size_t i = 0; i < shape.orders().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(shape.orders()[i]);
  }
  return s + ")";
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

}  // namespace

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw ParseError("unknown format '" + s + "' (expected json, csv, or table)");
}

RingPresentation parse_presentation(const std::string& json_text, std::size_t max_order) {
  ojson doc;
  try {
    doc = ojson::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  if (!doc.contains("orders") || !doc["orders"].is_array())
    throw ParseError("missing array field 'orders'");
  if (!doc.contains("products") || !doc["products"].is_array())
    throw ParseError("missing array field 'products'");

  std::vector<std::uint32_t> orders;
  for (std::size_t i = 0; i < doc["orders"].size(); ++i) {
    const auto& o = doc["orders"][i];
    if (!o.is_number_unsigned())
      throw ParseError("orders[" + std::to_string(i) + "] must be a nonnegative integer");
    orders.push_back(o.get<std::uint32_t>());
  }
  AbelianGroupShape shape(std::move(orders), max_order);
  const std::size_t k = shape.rank();

  if (doc["products"].size() != k)
    throw ParseError("products must have " + std::to_string(k) + " rows, found " +
                     std::to_string(doc["products"].size()));
  std::vector<Coords> products;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& row = doc["products"][i];
    if (!row.is_array() || row.size() != k)
      throw ParseError("products[" + std::to_string(i) + "] must be an array of " +
                       std::to_string(k) + " coefficient vectors");
    for (std::size_t j = 0; j < k; ++j) {
      const auto& entry = row[j];
      const std::string at = "products[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (!entry.is_array() || entry.size() != k)
        throw ParseError(at + " must be a coefficient vector of length " + std::to_string(k));
      Coords c;
      for (std::size_t t = 0; t < k; ++t) {
        if (!entry[t].is_number_unsigned())
          throw ParseError(at + "[" + std::to_string(t) + "] must be a nonnegative integer");
        c.push_back(entry[t].get<std::uint32_t>());
      }
      products.push_back(std::move(c));
    }
  }
  return RingPresentation(std::move(shape), std::move(products));
}

std::string render_presentation(const RingPresentation& p, Format f) {
  if (f == Format::Json) return dump(presentation_to_json(p));

  const std::size_t k = p.shape.rank();
  std::ostringstream out;
  if (f == Format::Csv) {
    out << "orders";
    for (std::uint32_t m : p.shape.orders()) out << "," << m;
    out << "\n";
    for (std::size_t i = 0; i < k; ++i) {
      out << "row" << i;
      for (std::size_t j = 0; j < k; ++j) {
        out << ",";
        const Coords& c = p.products[i * k + j];
        for (std::size_t t = 0; t < k; ++t) out << (t ? " " : "") << c[t];
      }
      out << "\n";
    }
    return out.str();
  }

  out << "shape: " << shape_text(p.shape) << "\n";
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Coords& c = p.products[i * k + j];
      out << "g" << i << "*g" << j << " = (";
      for (std::size_t t = 0; t < k; ++t) out << (t ? "," : "") << c[t];
      out << ")\n";
    }
  return out.str();
}

std::string render_profile(const FiniteRing& r, const ProfileResult& res, Format f,
                           bool witnesses) {
  if (f == Format::Json) {
    ojson doc;
    doc["order"] = r.size();
    doc["shape"] = shape_to_json(r.shape());
    doc["profile"] = profile_to_json(res.profile);
    if (witnesses) {
      ojson w;
      for (std::size_t c = 0; c < kMemberClassCount; ++c)
        w[kInvariantNames[c]] = witness_to_json(res.covers[c]);
      doc["witnesses"] = std::move(w);
    }
    return dump(doc);
  }

  const ExtNat values[kMemberClassCount] = {res.profile.sigma_add, res.profile.sigma,
                                            res.profile.eta_left, res.profile.eta_right,
                                            res.profile.eta};
  std::ostringstream out;
  if (f == Format::Csv) {
    for (std::size_t c = 0; c < kMemberClassCount; ++c)
      out << (c ? "," : "") << kInvariantNames[c];
    out << "\n";
    for (std::size_t c = 0; c < kMemberClassCount; ++c)
      out << (c ? "," : "") << to_string(values[c]);
    out << "\n";
    return out.str();
  }

  out << "order: " << r.size() << "\n";
  out << "shape: " << shape_text(r.shape()) << "\n";
  for (std::size_t c = 0; c < kMemberClassCount; ++c)
    out << kInvariantNames[c] << ": " << to_string(values[c]) << "\n";
  if (witnesses)
    for (std::size_t c = 0; c < kMemberClassCount; ++c)
      if (!res.covers[c].value.is_inf())
        out << "cover[" << kInvariantNames[c] << "]: " << witness_text(res.covers[c]) << "\n";
  return out.str();
}

CoveringProfile parse_profile(const std::string& json_text) {
  ojson doc;
  try {
    doc = ojson::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const ojson& p = doc.contains("profile") ? doc["profile"] : doc;
  CoveringProfile out;
  for (const char* name : kInvariantNames)
    if (!p.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  out.sigma_add = ext_from_json(p["sigma_add"], "sigma_add");
  out.sigma = ext_from_json(p["sigma"], "sigma");
  out.eta_left = ext_from_json(p["eta_left"], "eta_left");
  out.eta_right = ext_from_json(p["eta_right"], "eta_right");
  out.eta = ext_from_json(p["eta"], "eta");
  return out;
}

std::string render_census(const CensusResult& res, Format f) {
  const std::vector<ProfileRow> rows = profile_table(res);

  if (f == Format::Json) {
    ojson doc;
    ojson shapes = ojson::array();
    for (const auto& s : res.shapes) shapes.push_back(shape_to_json(s));
    doc["shapes"] = std::move(shapes);
    doc["total_classes"] = res.classes.size();
    ojson classes = ojson::array();
    for (const auto& cls : res.classes) {
      ojson c = presentation_to_json(cls.rep);
      c["profile"] = profile_to_json(cls.profile);
      classes.push_back(std::move(c));
    }
    doc["classes"] = std::move(classes);
    ojson jrows = ojson::array();
    for (const auto& row : rows) {
      ojson r;
      r["sigma"] = ext_to_json(row.sigma);
      r["eta_left"] = ext_to_json(row.eta_left);
      r["eta_right"] = ext_to_json(row.eta_right);
      r["eta"] = ext_to_json(row.eta);
      r["count"] = row.count;
      jrows.push_back(std::move(r));
    }
    doc["rows"] = std::move(jrows);
    return dump(doc);
  }

  std::ostringstream out;
  if (f == Format::Csv) {
    out << "sigma,eta_left,eta_right,eta,count\n";
    for (const auto& row : rows)
      out << to_string(row.sigma) << "," << to_string(row.eta_left) << ","
          << to_string(row.eta_right) << "," << to_string(row.eta) << "," << row.count << "\n";
    return out.str();
  }

  auto cell = [&out](const std::string& s, std::size_t width) {
    out << s;
    if (s.size() < width) out << std::string(width - s.size(), ' ');
  };
  cell("sigma", 7);
  cell("eta_left", 10);
  cell("eta_right", 11);
  cell("eta", 5);
  out << "count\n";
  for (const auto& row : rows) {
    cell(to_string(row.sigma), 7);
    cell(to_string(row.eta_left), 10);
    cell(to_string(row.eta_right), 11);
    cell(to_string(row.eta), 5);
    out << row.count << "\n";
  }
  out << "classes: " << res.classes.size() << "\n";
  return out.str();
}

std::string render_iso(const std::optional<IsoWitness>& w, Format f) {
  if (f == Format::Json) {
    ojson doc;
    doc["isomorphic"] = w.has_value();
    if (w) {
      ojson map = ojson::array();
      for (elem_t e : w->map) map.push_back(e);
      doc["map"] = std::move(map);
    }
    return dump(doc);
  }
  std::ostringstream out;
  if (f == Format::Csv) {
    out << "isomorphic\n" << (w ? "true" : "false") << "\n";
    return out.str();
  }
  out << "isomorphic: " << (w ? "yes" : "no") << "\n";
  if (w) {
    out << "map:";
    for (elem_t e : w->map) out << " " << e;
    out << "\n";
  }
  return out.str();
}

}  // namespace ringcover
