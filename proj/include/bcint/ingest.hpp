#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcint/model.hpp"

namespace bcint {

// Restricted component-diagram dialect:
//
//   <model system="Lib1">
//     <component name="Person" kind="entity">
//       <attribute name="first name" type="string"/>
//       <operation name="reading()"/>
//       <provided name="reading"/>
//       <required name="..."/>
//     </component>
//   </model>
//
// Anything else is skipped with a warning.
struct ImportResult {
  ComponentSet set;
  std::vector<std::string> warnings;
};

// Throws Error(kParse) with line information for malformed XML and
// Error(kValidation)/Error(kUniqueness) when the imported components break a
// model invariant; a partially valid set is never returned.
ImportResult import_xml(std::string_view document);

}  // namespace bcint
