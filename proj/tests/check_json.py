"""Run tfab --json commands and validate each object against the schema."""
import json
import pathlib
import subprocess
import sys

import jsonschema

tfab, schema_path, data = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
schema = json.loads(schema_path.read_text())
jsonschema.Draft202012Validator.check_schema(schema)

cases = [
    ("char", ["char", "(0; 3:2, 2:inf)"], 0),
    ("htype", ["htype", "(0; 2:7, 3:inf)"], 0),
    ("height", ["height", "--group", data / "z.tfab", "--elem", data / "six.tfab", "--prime", "2"], 0),
    ("lattice", ["meet", "(0; 2:inf, 3:4)", "(0; 3:1, 5:2)"], 0),
    ("lattice", ["join", "[0; 2]", "[0; 3]"], 0),
    ("reduce", ["reduce", "--group", data / "z2.tfab", "--elem", data / "uv.tfab"], 0),
    ("decision", ["ee", data / "z.tfab", data / "z_plus_q.tfab"], 0),
    ("decision", ["iso1", data / "z.tfab", data / "z_plus_q.tfab"], 1),
    ("decision", ["isotypic", data / "z.tfab", data / "z.tfab"], 0),
    ("decision", ["iso", data / "z.tfab", data / "z2.tfab"], 1),
    ("profile", ["profile", data / "z_plus_q.tfab"], 0),
    ("realize2_ladder", ["realize2", "--prime", "3", "--ladder", "0,0; 2:1,1", "--precision", "8"], 0),
    ("realize2_two_type", ["realize2", "--two-type", data / "ladder_two_type.json", "--precision", "12"], 0),
    ("extract2", ["extract2", "--group", data / "j3.tfab", "--elem", data / "ab.tfab"], 0),
    ("uniq-check", ["uniq-check", "--group", data / "j3.tfab", "--elem", data / "ab.tfab", "--prime", "3"], 0),
]

failures = 0
for name, args, code in cases:
    run = subprocess.run([tfab, "--json", *map(str, args)], capture_output=True, text=True)
    label = " ".join(map(str, args[:1]))
    if run.returncode != code:
        print(f"FAIL {label}: exit {run.returncode}, wanted {code}: {run.stderr.strip()}")
        failures += 1
        continue
    try:
        obj = json.loads(run.stdout)
        jsonschema.validate(obj, {"$ref": f"#/$defs/{name}", "$defs": schema["$defs"]},
                            cls=jsonschema.Draft202012Validator)
        print(f"ok   {label} ({name})")
    except (json.JSONDecodeError, jsonschema.ValidationError) as err:
        print(f"FAIL {label}: {err}")
        failures += 1

sys.exit(1 if failures else 0)
