import logging
from typing import Dict, List, Optional

from pyqglass.common import ConfigError, QglassDict
from pyqglass.config import RunConfig
from pyqglass.module.base import ExperimentModule, ExperimentResult

logger = logging.getLogger(__name__)


class ExperimentRegistry:
    """Name -> experiment lookup used by the command line."""

    def __init__(self):
        self.experiments = QglassDict({})

    def register(self, experiment: ExperimentModule) -> None:
        name = experiment.name.data
        if name in self.experiments.data:
            logger.warning("experiment '%s' already registered, replacing it", name)
        self.experiments.data[name] = experiment
        logger.debug("experiment '%s' registered", name)

    def register_all(self, experiments: List[ExperimentModule]) -> None:
        for experiment in experiments:
            self.register(experiment)

    def get(self, name: str) -> Optional[ExperimentModule]:
        return self.experiments.data.get(name)

    def names(self) -> List[str]:
        return list(self.experiments.data)

    def descriptions(self) -> Dict[str, str]:
        return {name: exp.description.data for name, exp in self.experiments.data.items()}

    def run(self, config: RunConfig) -> ExperimentResult:
        experiment = self.get(config.command.data)
        if experiment is None:
            raise ConfigError([f"command: no experiment named {config.command.data!r}"])
        logger.info("running %s (digest %s)", experiment.name.data, config.digest()[:12])
        return experiment(config)
