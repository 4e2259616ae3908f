from setuptools import setup, find_packages
import os


# extract version
with open(os.path.join(os.path.dirname(__file__),
                       "pyduality", "version.py")) as f:
    version = f.read().split("\n")[0].split("=")[-1].strip(' ').strip('"')


# read a file
def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


setup(
    install_requires=["numpy>=1.15.2", "scipy>=1.4.0",
                      "pandas>=0.23.4", "cloudpickle>=0.7.0",
                      "dill>=0.2.8.2", "click>=7.0"],
    extras_require={"test": ["pytest>=5.0", "flake8>=3.7"]},
    python_requires='>=3.6',
    packages=find_packages(exclude=["examples*", "test*", "test"]),
    name="pyduality",
    version=version,
    platforms="all",
    include_package_data=True,
    description='Simulated wave-particle duality experiments: coherence, '
                'path discrimination and tomography',
    long_description=read('README.md'),
    long_description_content_type='text/markdown',
    classifiers=[
      'Programming Language :: Python :: 3.6',
      'License :: OSI Approved :: BSD License',
      'Operating System :: OS Independent',
    ],
    license='BSD-3-Clause',
    keywords='wave-particle duality, quantum coherence, '
             'state discrimination, quantum state tomography',
    zip_safe=True,
    entry_points={
        'console_scripts': [
            'duality = pyduality.cli:main',
        ]
    },
)
