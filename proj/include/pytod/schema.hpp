#pragma once

// Service schema catalog in SGD format: loading, validation, indexing, and
// the action-parser header rendering.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pytod/errors.hpp"
#include "pytod/templates.hpp"

namespace pytod::schema {

enum class DataType { String, Integer, Boolean };

std::string to_string(DataType type);

struct SlotSpec {
    std::string name;
    std::string description;
    bool is_categorical = false;
    std::vector<std::string> possible_values;  // empty iff not categorical
    DataType data_type = DataType::String;

    bool has_value(const std::string& value) const;
};

struct IntentSpec {
    std::string name;
    std::string description;
    bool is_transactional = false;
    std::vector<std::string> required_slots;
    std::map<std::string, std::string> optional_slots;  // slot -> default value
    std::vector<std::string> result_slots;
    std::string result_entity_name;  // defaults to "<name>Result"

    bool is_search() const { return !is_transactional; }
    bool takes_argument(const std::string& slot) const;
};

struct ServiceSchema {
    std::string service_name;
    std::string description;
    std::vector<SlotSpec> slots;
    std::vector<IntentSpec> intents;

    const SlotSpec* find_slot(const std::string& name) const;
    const IntentSpec* find_intent(const std::string& name) const;
    bool has_slot(const std::string& name) const { return find_slot(name) != nullptr; }
    std::vector<std::string> intent_names() const;
};

struct SchemaCatalog {
    std::map<std::string, ServiceSchema> services;
    std::set<std::string> seen_services;
    std::vector<std::string> warnings;  // e.g. seen names absent from this split

    const ServiceSchema* find_service(const std::string& name) const;
    bool is_seen(const std::string& service_name) const {
        return seen_services.count(service_name) > 0;
    }
};

struct TaskStackEntry {
    std::string intent_name;
    std::string summary;
    // Returned entity, flattened for rendering; entity_type empty when the
    // task produced no entity.
    std::string entity_type;
    std::vector<std::pair<std::string, std::string>> entity_properties;
};

// Loads and validates an SGD `schema.json` document (a JSON array of service
// objects). Unknown seen_services names produce warnings, not failures.
// Throws IoError / FormatError / ValidationError.
SchemaCatalog load_schema_catalog(const std::string& path,
                                  const std::vector<std::string>& seen_services);

// Same validation applied to an already-parsed service list (used by tests
// and fixture builders).
SchemaCatalog build_catalog(std::vector<ServiceSchema> services,
                            const std::vector<std::string>& seen_services);

// Deterministic header text: completed-task block, task instructions, then
// one Python-style signature per intent. Ordering and wording pinned by
// golden files.
std::string linearize_header(const ServiceSchema& service,
                             const std::vector<TaskStackEntry>& task_stack,
                             const TemplateSet& templates = default_templates());

}  // namespace pytod::schema
