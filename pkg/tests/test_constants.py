import os

from sl2q import constants
from sl2q.constants import DEFAULT_SETTINGS, SETTINGS_PATH, load_settings


def test_settings_file_sits_next_to_the_package():
    assert os.path.dirname(SETTINGS_PATH) == constants.CURRENT_DIR
    assert os.path.exists(SETTINGS_PATH)


def test_missing_file_uses_defaults(tmp_path):
    assert load_settings(str(tmp_path / "absent.yaml")) == DEFAULT_SETTINGS


def test_unknown_keys_are_ignored(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("classification:\n  search_bound: 4\n  colour: red\nextra:\n  key: 1\n")
    settings = load_settings(str(path))
    assert settings["classification"] == {"search_bound": 4}
    assert "extra" not in settings
    assert settings["numeric"] == DEFAULT_SETTINGS["numeric"]
