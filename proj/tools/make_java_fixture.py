#!/usr/bin/env python3
"""Regenerates the synthetic 12-concept Java course fixture under data/.

The concept list follows the Java programming course used to motivate the
tool. The initial links are a plausible expert hierarchy and the 48 learner
grades are synthetic: each learner has a latent ability, each concept an
offset and a noise level, chosen so that the reference parameters
(s1=-5, s2=5, s3=10, alpha=0.5) keep, reverse and drop links.

    python3 tools/make_java_fixture.py [--out-dir data]
"""

import argparse
import json
import random
from pathlib import Path

CONCEPTS = [
    ("ElemJava", "Elementary of Java"),
    ("Objects", "Objects and Classes"),
    ("Packages", "Packages"),
    ("InnerClasses", "Inner Classes"),
    ("FluxIO", "Flux I/O"),
    ("Exceptions", "Exceptions"),
    ("Inheritance", "Inheritance"),
    ("Serialization", "Serialization"),
    ("Interfaces", "Interfaces"),
    ("Polymorphism", "Polymorphism"),
    ("Threads", "Threads"),
    ("Collections", "Collections"),
]

LINKS = [
    ("ElemJava", "Objects"),
    ("Objects", "Packages"),
    ("Objects", "InnerClasses"),
    ("Packages", "InnerClasses"),
    ("Objects", "Inheritance"),
    ("Objects", "Exceptions"),
    ("Inheritance", "Interfaces"),
    ("Inheritance", "Polymorphism"),
    ("Interfaces", "Polymorphism"),
    ("Exceptions", "FluxIO"),
    ("FluxIO", "Serialization"),
    ("Exceptions", "Threads"),
    ("Interfaces", "Collections"),
]

# concept id -> (offset from learner ability, noise standard deviation)
PROFILE = {
    "ElemJava": (3, 1.0),
    "Objects": (3, 1.0),
    "Packages": (3, 1.0),
    "InnerClasses": (3, 6.0),
    "Inheritance": (3, 1.0),
    "Interfaces": (3, 1.0),
    "Polymorphism": (3, 1.0),
    "Exceptions": (1, 1.0),
    "FluxIO": (6, 1.0),
    "Serialization": (6, 1.0),
    "Threads": (-7, 1.0),
    "Collections": (8, 1.0),
}

LEARNERS = 48
SCALE_MAX = 20
SEED = 2014


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default=str(Path(__file__).resolve().parent.parent / "data"))
    args = parser.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    course = {
        "id": "java-101",
        "title": "Java programming language (synthetic fixture)",
        "grade_scale_max": SCALE_MAX,
        "concepts": [{"id": cid, "name": name} for cid, name in CONCEPTS],
        "links": [{"source": s, "target": t} for s, t in LINKS],
    }
    (out / "java-101.course.json").write_text(json.dumps(course, indent=2) + "\n")

    rng = random.Random(SEED)
    rows = ["learner," + ",".join(cid for cid, _ in CONCEPTS)]
    for n in range(1, LEARNERS + 1):
        ability = rng.randint(7, 11)
        grades = []
        for cid, _ in CONCEPTS:
            offset, sd = PROFILE[cid]
            g = round(ability + offset + rng.gauss(0.0, sd))
            grades.append(str(min(SCALE_MAX, max(0, g))))
        rows.append(f"s{n:02d}," + ",".join(grades))
    (out / "java-101.grades.csv").write_text("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
