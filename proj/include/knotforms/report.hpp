#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "knotforms/brieskorn.hpp"
#include "knotforms/cobordism.hpp"
#include "knotforms/links.hpp"
#include "knotforms/matrix_file.hpp"
#include "knotforms/sphere_groups.hpp"

namespace knotforms {

/// Ordered key-value document; rendered as aligned text or as JSON.
using Report = nlohmann::ordered_json;

enum class Format { text, machine };

std::string render(const Report& r, Format f);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Report integer_json(const Integer& z);
Report matrix_json(const IntMatrix& m);
Report matrix_json(const RatMatrix& m);

Report invariants_report(const MatrixFile& f);
Report germ_document(const GermReport& g);
Report cobordance_document(const CobordanceVerdict& v, int bound);
Report groups_document(int from, int to, const std::vector<ExceptionalDimension>& table);
Report handles_document(const MatrixFile& f);

}  // namespace knotforms
