#!/usr/bin/env python

"""Regenerates docs/output-schema.json from the CLI's OutputEnvelope model."""

import json
from argparse import ArgumentParser
from pathlib import Path

from selfdeg.types.cli_types import OutputEnvelope

parser = ArgumentParser()
parser.add_argument(
    "--output",
    type=Path,
    help="Where to write the schema",
    default=Path(__file__).parents[1] / "docs" / "output-schema.json",
)

args = parser.parse_args()

args.output.write_text(json.dumps(OutputEnvelope.model_json_schema(), indent=2) + "\n")
print(f"Wrote {args.output}")
