#include "pytod/templates.hpp"

#include <fstream>

#include <json.hpp>

#include "pytod/errors.hpp"

namespace pytod {

const TemplateSet& default_templates() {
    static const TemplateSet set = [] {
        TemplateSet t;
        t.task_instructions =
            "Instructions: you are a virtual assistant helping a user complete tasks.\n"
            "Identify the API below that matches the user intent and extract the argument\n"
            "values the user provides, writing one Python statement per user action.\n"
            "Communicate system actions to the user by passing them to say(...).";
        t.task_summary = "# Task completed: {summary}";
        t.entity_docstring =
            "Copy relevant argument values from this entity to the parameters of "
            "subsequent API calls.";
        t.entity_instruction_leadin =
            "The user may ask about the following properties of the retrieved "
            "{entity_type}. Communicate requested values to the user with say(...).";
        t.policy_note_confirm =
            "Confirm the {intent} values with the user before executing the call. "
            "Record corrections by assigning the corrected parameter values.";
        t.ss_unknown_slot_question =
            "The parameter \"{predicted}\" with value \"{value}\" is not part of the "
            "{intent} API. Which of the following parameters was meant?";
        t.ss_unknown_slot_cat_question =
            "The parameter \"{predicted}\" is not part of the {intent} API, but its "
            "value \"{value}\" is listed in the schema. Which of the following "
            "parameters was meant?";
        t.ss_paraphrase_question =
            "The parameter \"{predicted}\" is not part of the {intent} API. Select "
            "the closest paraphrase of \"{predicted}\" among the following parameter "
            "descriptions.";
        t.ss_value_only_question =
            "\"{value}\" is not a valid value for the parameter \"{slot}\". Select "
            "the intended value.";
        t.ss_none_option = "none of the above";
        t.mqa_answer_cue = "Answer:";
        t.ps_instruction =
            "Answer each question using only the conversation above. Answer \"none\" "
            "if the conversation does not contain the answer.";
        t.qa_answer_cue = "Answers:";
        return t;
    }();
    return set;
}

namespace {

void assign_field(TemplateSet& set, const std::string& key, const std::string& value) {
    if (key == "task_instructions") set.task_instructions = value;
    else if (key == "task_summary") set.task_summary = value;
    else if (key == "entity_docstring") set.entity_docstring = value;
    else if (key == "entity_instruction_leadin") set.entity_instruction_leadin = value;
    else if (key == "policy_note_confirm") set.policy_note_confirm = value;
    else if (key == "ss_unknown_slot_question") set.ss_unknown_slot_question = value;
    else if (key == "ss_unknown_slot_cat_question") set.ss_unknown_slot_cat_question = value;
    else if (key == "ss_paraphrase_question") set.ss_paraphrase_question = value;
    else if (key == "ss_value_only_question") set.ss_value_only_question = value;
    else if (key == "ss_none_option") set.ss_none_option = value;
    else if (key == "mqa_answer_cue") set.mqa_answer_cue = value;
    else if (key == "ps_instruction") set.ps_instruction = value;
    else if (key == "qa_answer_cue") set.qa_answer_cue = value;
    else throw FormatError("unknown template key: " + key);
}

}  // namespace

TemplateSet load_template_overrides(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open template file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& err) {
        throw FormatError("template file " + path + ": " + err.what());
    }
    if (!doc.is_object()) throw FormatError("template file must hold a JSON object");
    TemplateSet set = default_templates();
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_string()) throw FormatError("template key " + key + " must be a string");
        assign_field(set, key, value.get<std::string>());
    }
    return set;
}

std::string expand_template(
    const std::string& tmpl,
    std::initializer_list<std::pair<std::string, std::string>> args) {
    std::string out = tmpl;
    for (const auto& [name, value] : args) {
        const std::string needle = "{" + name + "}";
        std::size_t pos = 0;
        while ((pos = out.find(needle, pos)) != std::string::npos) {
            out.replace(pos, needle.size(), value);
            pos += value.size();
        }
    }
    return out;
}

}  // namespace pytod
