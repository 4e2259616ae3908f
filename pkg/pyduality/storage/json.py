import json

import numpy as np


def _default(x):
    if isinstance(x, np.generic):
        return x.item()
    if isinstance(x, np.ndarray):
        return x.tolist()
    raise TypeError(f"{type(x).__name__} is not JSON serializable")


def dict_to_json(dct) -> str:
    """
    Serialize dict, converting numpy scalars and arrays.
    """
    return json.dumps(dct, default=_default, indent=2, sort_keys=True)


def save_dict_to_json(dct, log_file):
    """
    Save dict to file.
    """
    with open(log_file, 'w') as f:
        f.write(dict_to_json(dct))
        f.write("\n")


def load_dict_from_json(log_file):
    """
    Read in json file.
    """
    with open(log_file, 'r') as f:
        return json.load(f)
