"""Validate a JSON document on stdin against a schema file."""
import json
import sys

import jsonschema

schema = json.load(open(sys.argv[1]))
jsonschema.validate(json.load(sys.stdin), schema)
print("valid")
