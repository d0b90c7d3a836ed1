"""Registry for node programs and selected-subgraph payloads."""
from typing import Any

from src.app.core.engine.base import NodeProgram
from src.app.core.programs.backup_placement import BackupPlacementProgram
from src.app.core.programs.forest_coloring import ForestColoringProgram
from src.app.core.programs.maximal_matching import ForestMatchingProgram
from src.app.core.programs.self_stabilizing import (
    ConstantPayload,
    DegreeEchoPayload,
    PayloadProgram,
    SelfStabBackupPlacementProgram,
)


class ProgramFactory:
    """Factory for creating node program and payload instances by name."""

    _programs: dict[str, type[NodeProgram]] = {
        "backup-placement": BackupPlacementProgram,
        "forest-coloring": ForestColoringProgram,
        "forest-matching": ForestMatchingProgram,
        "selfstab-backup-placement": SelfStabBackupPlacementProgram,
    }

    _payloads: dict[str, type[PayloadProgram]] = {
        "constant": ConstantPayload,
        "degree-echo": DegreeEchoPayload,
    }

    @classmethod
    def register_program(cls, name: str, program_class: type[NodeProgram]) -> None:
        """Register a new node program.

        Args:
            name: The name to register the program under.
            program_class: The program class to register.
        """
        cls._programs[name.lower()] = program_class

    @classmethod
    def register_payload(cls, name: str, payload_class: type[PayloadProgram]) -> None:
        """Register a new payload program."""
        cls._payloads[name.lower()] = payload_class

    @classmethod
    def create(cls, name: str, **kwargs: Any) -> NodeProgram:
        """Create a node program instance.

        Args:
            name: The registered program name.
            **kwargs: Passed to the program constructor.

        Returns:
            A fresh instance of the requested program.

        Raises:
            ValueError: If the program name is not recognized.
        """
        key = name.lower()
        if key not in cls._programs:
            raise ValueError(
                f"Unknown program: {name}. Available programs: {', '.join(cls.list_programs())}"
            )
        return cls._programs[key](**kwargs)

    @classmethod
    def create_payload(cls, name: str) -> PayloadProgram:
        """Create a payload program instance.

        Raises:
            ValueError: If the payload name is not recognized.
        """
        key = name.lower()
        if key not in cls._payloads:
            raise ValueError(
                f"Unknown payload: {name}. Available payloads: {', '.join(cls.list_payloads())}"
            )
        return cls._payloads[key]()

    @classmethod
    def list_programs(cls) -> list[str]:
        return sorted(cls._programs)

    @classmethod
    def list_payloads(cls) -> list[str]:
        return sorted(cls._payloads)
