"""Validate an annotation bundle against the interchange schema.

    python3 validate_bundle.py SCHEMA BUNDLE [SEGMENTATION]

With a segmentation export, sentence and token indices are also checked
against the core's segmentation of the same stories.
"""
import json
import sys

from jsonschema import Draft202012Validator


def main(schema_path, bundle_path, segmentation_path=None):
    with open(schema_path) as f:
        validator = Draft202012Validator(json.load(f))
    sentences = {}
    if segmentation_path:
        with open(segmentation_path) as f:
            for line in f:
                story = json.loads(line)
                sentences[story["story_id"]] = [len(s["tokens"]) for s in story["sentences"]]

    problems = []
    with open(bundle_path) as f:
        for n, line in enumerate(f, 1):
            if not line.strip():
                continue
            obj = json.loads(line)
            if "header" in obj and n != 1:
                problems.append(f"line {n}: header must be the first line")
            for err in validator.iter_errors(obj):
                problems.append(f"line {n}: {err.message}")
            if "story_id" not in obj or not sentences:
                continue
            sizes = sentences.get(obj["story_id"])
            if sizes is None:
                problems.append(f"line {n}: story {obj['story_id']} not in segmentation")
                continue
            spans = [(m["sentence"], m["span"]) for c in obj.get("characters", []) for m in c["mentions"]]
            spans += [(e["sentence"], e["trigger_span"]) for e in obj.get("events", [])]
            for sent, (b, e) in spans:
                if sent >= len(sizes) or e > sizes[sent] or b >= e:
                    problems.append(f"line {n}: span {sent}:[{b},{e}) outside segmentation")

    for p in problems:
        print(p)
    print("ok" if not problems else f"{len(problems)} problem(s)")
    return 1 if problems else 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
