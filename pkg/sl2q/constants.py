import os
import copy
import logging

import yaml

logger = logging.getLogger(__name__)

CURRENT_DIR = os.path.dirname(os.path.abspath(__file__))
SETTINGS_PATH = os.path.join(CURRENT_DIR, "settings.yaml")

DEFAULT_SETTINGS = {
    "classification": {"search_bound": 10},
    "numeric": {
        "tolerance": 1.0e-12,
        "pole_tolerance": 1.0e-14,
        "root_of_unity_tolerance": 1.0e-9,
        "significant_digits": 17,
    },
    "cli": {"json_indent": 2},
    "logging": {"level": "WARNING"},
}


def load_settings(settings_path=SETTINGS_PATH):
    """
    Load settings from a YAML file layered over the built-in defaults.

    Args:
        settings_path (str): Path to the settings YAML file

    Returns:
        dict: Section name -> dict of values
    """
    settings = copy.deepcopy(DEFAULT_SETTINGS)
    if not os.path.exists(settings_path):
        logger.debug(f"[load_settings] {settings_path} not found, using defaults")
        return settings

    with open(settings_path, "r") as f:
        loaded = yaml.safe_load(f) or {}

    for section, values in loaded.items():
        if section not in settings or not isinstance(values, dict):
            continue
        for key, value in values.items():
            if key in settings[section]:
                settings[section][key] = value
    return settings


SETTINGS = load_settings()

SEARCH_BOUND = int(SETTINGS["classification"]["search_bound"])
TOLERANCE = float(SETTINGS["numeric"]["tolerance"])
POLE_TOLERANCE = float(SETTINGS["numeric"]["pole_tolerance"])
ROOT_OF_UNITY_TOLERANCE = float(SETTINGS["numeric"]["root_of_unity_tolerance"])
SIGNIFICANT_DIGITS = int(SETTINGS["numeric"]["significant_digits"])
JSON_INDENT = int(SETTINGS["cli"]["json_indent"])
LOG_LEVEL = str(SETTINGS["logging"]["level"])
