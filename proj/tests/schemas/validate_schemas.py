"""Validate sample inputs and live CLI output against schemas/v1."""

import glob
import json
import os
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

cli, root = sys.argv[1], sys.argv[2]
schemas = {}
registry = Registry()
for path in glob.glob(os.path.join(root, "schemas", "v1", "*.schema.json")):
    doc = json.load(open(path))
    jsonschema.Draft202012Validator.check_schema(doc)
    schemas[os.path.basename(path)] = doc
    registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))


def check(name, doc, label):
    jsonschema.Draft202012Validator(schemas[name], registry=registry).validate(doc)
    print(f"ok {label} against {name}")


specs = os.path.join(root, "samples", "specs")
for f in ("single_block.json", "mixed_blocks.json"):
    check("component-spec.schema.json", json.load(open(os.path.join(specs, f))), f)
check("generators.schema.json", json.load(open(os.path.join(specs, "qc_generators_z4.json"))), "qc_generators_z4.json")
check("tau-file.schema.json", json.load(open(os.path.join(specs, "tau_arbitrary.json"))), "tau_arbitrary.json")

with tempfile.TemporaryDirectory() as tmp:
    out = os.path.join(tmp, "code.json")
    subprocess.run([cli, "build", "--spec", os.path.join(specs, "mixed_blocks.json"), "--out", out],
                   check=True, stdout=subprocess.DEVNULL)
    check("code.schema.json", json.load(open(out)), "build --out")
    check("component-spec.schema.json", json.load(open(out)), "build --out")
    dual = os.path.join(tmp, "dual.json")
    subprocess.run([cli, "dual", "--code", out, "--out", dual], check=True, stdout=subprocess.DEVNULL)
    check("code.schema.json", json.load(open(dual)), "dual --out")

for args in (["verify", "--m", "4", "--s", "1"], ["qc-check", "--tau", "1,eta:1,0", "--n", "7"]):
    doc = json.loads(subprocess.run([cli, *args], check=True, capture_output=True).stdout)
    check("report.schema.json", doc, " ".join(args[:1]))
