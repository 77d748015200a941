#pragma once

// Prompt text assets: header instructions, supervisor question templates and
// context-instruction lead-ins. The defaults below are the pinned wording
// (golden files fix the rendering); a deployment may override any field from
// a JSON file. Placeholders use {name} syntax.

#include <string>

namespace pytod {

struct TemplateSet {
    // Action-parser header.
    std::string task_instructions;
    std::string task_summary;       // {summary}
    std::string entity_docstring;   // copy-values instruction

    // Context-dependent instructions (developer turns).
    std::string entity_instruction_leadin;  // {entity_type}
    std::string policy_note_confirm;        // {intent}

    // Schema-supervisor questions, multiple-choice format.
    std::string ss_unknown_slot_question;      // {predicted}, {value}, {intent}
    std::string ss_unknown_slot_cat_question;  // {predicted}, {value}, {intent}
    std::string ss_paraphrase_question;        // {predicted}, {intent}
    std::string ss_value_only_question;        // {slot}, {value}
    std::string ss_none_option;
    std::string mqa_answer_cue;

    // Parser-supervisor extractive QA.
    std::string ps_instruction;
    std::string qa_answer_cue;
};

const TemplateSet& default_templates();

// Replaces fields present in the JSON object at `path`; unknown keys are a
// FormatError. Returns the merged set.
TemplateSet load_template_overrides(const std::string& path);

// Substitutes {name} placeholders; unknown placeholders are left verbatim.
std::string expand_template(const std::string& tmpl,
                            std::initializer_list<std::pair<std::string, std::string>> args);

}  // namespace pytod
