"""
Basic Unit Tests
"""
import pytest
import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

def test_imports():
    from src.utils import config
    from src import automata, treecalc, acceptor, multipliers, verify, cli
    assert True

def test_config_loading():
    from src.utils.config import settings, PAD, VERIFY_CONFIG
    assert settings is not None
    assert settings.verify.max_carets <= settings.enumeration.max_carets
    assert PAD == settings.automata.pad_symbol
    assert VERIFY_CONFIG["seed"] == settings.verify.seed

def test_only_log_directory_is_created():
    from src.utils import config
    assert config.LOG_DIR.is_dir()
    assert not hasattr(config, "DATA_DIR")

def test_pad_symbol_validation():
    from src.utils.config import AutomataConfig
    with pytest.raises(ValueError):
        AutomataConfig(pad_symbol="r")
    with pytest.raises(ValueError):
        AutomataConfig(pad_symbol=",")
    assert AutomataConfig(pad_symbol="$").pad_symbol == "$"

def test_custom_exceptions():
    from src.utils.exceptions import (
        ThompsonAutomataError, AutomatonError, DecodeError, TreeError, ParseError, ValidationError,
        ResourceLimitError, get_error_response,
    )
    error = ThompsonAutomataError("test", "TEST")
    assert "TEST" in str(error)
    assert issubclass(AutomatonError, ThompsonAutomataError)
    assert issubclass(DecodeError, TreeError)
    assert issubclass(ParseError, ValidationError)

    response = get_error_response(DecodeError("bad word", "one-root", 3))
    assert response["error_code"] == "DECODE_ERROR"
    assert response["condition"] == "one-root"
    assert response["position"] == 3
    assert get_error_response(ResourceLimitError("radius", 20, 10))["field"] == "radius"
    assert get_error_response(KeyError("x"))["error_code"] == "UNKNOWN"

def test_logger_namespace():
    from src.utils.logging_config import LOGGER_NAME, get_logger
    assert get_logger("src.automata.machine").name == f"{LOGGER_NAME}.src.automata.machine"
    assert get_logger().name == LOGGER_NAME

if __name__ == "__main__":
    pytest.main([__file__, "-v"])
