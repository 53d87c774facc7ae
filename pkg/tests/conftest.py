import pathlib
import sys

_HERE = pathlib.Path(__file__).resolve().parent
for p in (str(_HERE.parent / "src"), str(_HERE)):
    if p not in sys.path:
        sys.path.insert(0, p)
