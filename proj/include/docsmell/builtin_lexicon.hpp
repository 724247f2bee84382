// Generated from data/common_words.txt. Do not edit by hand.
#pragma once

#include <string_view>

namespace docsmell::detail {

inline constexpr std::string_view builtin_lexicon_text =
    "the\nof\nand\nto\na\nin\nfor\nis\non\nthat\nby\nthis\n"
    "with\ni\nyou\nit\nnot\nor\nbe\nare\nfrom\nat\nas\nyour\n"
    "all\nhave\nnew\nmore\nan\nwas\nwe\nwill\nhome\ncan\nus\nabout\n"
    "if\npage\nmy\nhas\nsearch\nfree\nbut\nour\none\nother\ndo\nno\n"
    "information\ntime\nthey\nsite\nhe\nup\nmay\nwhat\nwhich\ntheir\nnews\nout\n"
    "use\nany\nthere\nsee\nonly\nso\nhis\nwhen\ncontact\nhere\nbusiness\nwho\n"
    "web\nalso\nnow\nhelp\nget\npm\nview\nonline\nc\ne\nfirst\nam\n"
    "been\nwould\nhow\nwere\nme\ns\nservices\nsome\nthese\nclick\nits\nlike\n"
    "service\nx\nthan\nfind\nprice\ndate\nback\ntop\npeople\nhad\nlist\nname\n"
    "just\nover\nstate\nyear\nday\ninto\nemail\ntwo\nhealth\nn\nworld\nre\n"
    "next\nused\ngo\nb\nwork\nlast\nmost\nproducts\nmusic\nbuy\ndata\nmake\n"
    "them\nshould\nproduct\nsystem\npost\nher\ncity\nt\nadd\npolicy\nnumber\nsuch\n"
    "please\navailable\ncopyright\nsupport\nmessage\nafter\nbest\nsoftware\nthen\njan\ngood\nvideo\n"
    "well\nd\nwhere\ninfo\nrights\npublic\nbooks\nhigh\nschool\nthrough\nm\neach\n"
    "links\nshe\nreview\nyears\norder\nvery\nprivacy\nbook\nitems\ncompany\nr\nread\n"
    "group\nsex\nneed\nmany\nuser\nsaid\nde\ndoes\nset\nunder\ngeneral\nresearch\n"
    "university\njanuary\nmail\nfull\nmap\nreviews\nprogram\nlife\nknow\ngames\nway\ndays\n"
    "management\np\npart\ncould\ngreat\nunited\nhotel\nreal\nf\nitem\ninternational\ncenter\n"
    "ebay\nmust\nstore\ntravel\ncomments\nmade\ndevelopment\nreport\noff\nmember\ndetails\nline\n"
    "terms\nbefore\nhotels\ndid\nsend\nright\ntype\nbecause\nlocal\nthose\nusing\nresults\n"
    "office\neducation\nnational\ncar\ndesign\ntake\nposted\ninternet\naddress\ncommunity\nwithin\nstates\n"
    "area\nwant\nphone\ndvd\nshipping\nreserved\nsubject\nbetween\nforum\nfamily\nl\nlong\n"
    "based\nw\ncode\nshow\no\neven\nblack\ncheck\nspecial\nprices\nwebsite\nindex\n"
    "being\nwomen\nmuch\nsign\nfile\nlink\nopen\ntoday\ntechnology\nsouth\ncase\nproject\n"
    "same\npages\nuk\nversion\nsection\nown\nfound\nsports\nhouse\nrelated\nsecurity\nboth\n"
    "g\ncounty\namerican\nphoto\ngame\nmembers\npower\nwhile\ncare\nnetwork\ndown\ncomputer\n"
    "systems\nthree\ntotal\nplace\nend\nfollowing\ndownload\nh\nhim\nwithout\nper\naccess\n"
    "think\nnorth\nresources\ncurrent\nposts\nbig\nmedia\nlaw\ncontrol\nwater\nhistory\npictures\n"
    "size\nart\npersonal\nsince\nincluding\nguide\nshop\ndirectory\nboard\nlocation\nchange\nwhite\n"
    "text\nsmall\nrating\nrate\ngovernment\nchildren\nduring\nusa\nreturn\nstudents\nv\nshopping\n"
    "account\ntimes\nsites\nlevel\ndigital\nprofile\nprevious\nform\nevents\nlove\nold\njohn\n"
    "main\ncall\nhours\nimage\ndepartment\ntitle\ndescription\nnon\nk\ny\ninsurance\nanother\n"
    "why\nshall\nproperty\nclass\ncd\nstill\nmoney\nquality\nevery\nlisting\ncontent\ncountry\n"
    "private\nlittle\nvisit\nsave\ntools\nlow\nreply\ncustomer\ndecember\ncompare\nmovies\ninclude\n"
    "college\nvalue\narticle\nyork\nman\ncard\njobs\nprovide\nj\nfood\nsource\nauthor\n"
    "different\npress\nu\nlearn\nsale\naround\nprint\ncourse\njob\ncanada\nprocess\nteen\n"
    "room\nstock\ntraining\ntoo\ncredit\npoint\njoin\nscience\nmen\ncategories\nadvanced\nwest\n"
    "sales\nlook\nenglish\nleft\nteam\nestate\nbox\nconditions\nselect\nwindows\nphotos\ngay\n"
    "thread\nweek\ncategory\nnote\nlive\nlarge\ngallery\ntable\nregister\nhowever\njune\noctober\n"
    "november\nmarket\nlibrary\nreally\naction\nstart\nseries\nmodel\nfeatures\nair\nindustry\nplan\n"
    "human\nprovided\ntv\nyes\nrequired\nsecond\nhot\naccessories\ncost\nmovie\nforums\nmarch\n"
    "la\nseptember\nbetter\nsay\nquestions\njuly\nyahoo\ngoing\nmedical\ntest\nfriend\ncome\n"
    "dec\nserver\npc\nstudy\napplication\ncart\nstaff\narticles\nsan\nfeedback\nagain\nplay\n"
    "looking\nissues\napril\nnever\nusers\ncomplete\nstreet\ntopic\ncomment\nfinancial\nthings\nworking\n"
    "against\nstandard\ntax\nperson\nbelow\nmobile\nless\ngot\nblog\nparty\npayment\nequipment\n"
    "login\nstudent\nlet\nprograms\noffers\nlegal\nabove\nrecent\npark\nstores\nside\nact\n"
    "problem\nred\ngive\nmemory\nperformance\nsocial\nq\naugust\nquote\nlanguage\nstory\nsell\n"
    "options\nexperience\nrates\ncreate\nkey\nbody\nyoung\namerica\nimportant\nfield\nfew\neast\n"
    "paper\nsingle\nii\nage\nactivities\nclub\nexample\ngirls\nadditional\npassword\nz\nlatest\n"
    "something\nroad\ngift\nquestion\nchanges\nnight\nca\nhard\ntexas\noct\npay\nfour\n"
    "poker\nstatus\nbrowse\nissue\nrange\nbuilding\nseller\ncourt\nfebruary\nalways\nresult\naudio\n"
    "light\nwrite\nwar\nnov\noffer\nblue\ngroups\nal\neasy\ngiven\nfiles\nevent\n"
    "release\nanalysis\nrequest\nfax\nchina\nmaking\npicture\nneeds\npossible\nmight\nprofessional\nyet\n"
    "month\nmajor\nstar\nareas\nfuture\nspace\ncommittee\nhand\nsun\ncards\nproblems\nlondon\n"
    "washington\nmeeting\nrss\nbecome\ninterest\nid\nchild\nkeep\nenter\ncalifornia\nporn\nshare\n"
    "similar\ngarden\nschools\nmillion\nadded\nreference\ncompanies\nlisted\nbaby\nlearning\nenergy\nrun\n"
    "delivery\nnet\npopular\nterm\nfilm\nstories\nput\ncomputers\njournal\nreports\nco\ntry\n"
    "welcome\ncentral\nimages\npresident\nnotice\ngod\noriginal\nhead\nradio\nuntil\ncell\ncolor\n"
    "self\ncouncil\naway\nincludes\ntrack\naustralia\ndiscussion\narchive\nonce\nothers\nentertainment\nagreement\n"
    "format\nleast\nsociety\nmonths\nlog\nsafety\nfriends\nsure\nfaq\ntrade\nedition\ncars\n"
    "messages\nmarketing\ntell\nfurther\nupdated\nassociation\nable\nhaving\nprovides\ndavid\nfun\nalready\n"
    "green\nstudies\nclose\ncommon\ndrive\nspecific\nseveral\ngold\nfeb\nliving\nsep\ncollection\n"
    "called\nshort\narts\nlot\nask\ndisplay\nlimited\npowered\nsolutions\nmeans\ndirector\ndaily\n"
    "beach\npast\nnatural\nwhether\ndue\net\nelectronics\nfive\nupon\nperiod\nplanning\ndatabase\n"
    "says\nofficial\nweather\nmar\nland\naverage\ndone\ntechnical\nwindow\nfrance\npro\nregion\n"
    "island\nrecord\ndirect\nmicrosoft\nconference\nenvironment\nrecords\nst\ndistrict\ncalendar\ncosts\nstyle\n"
    "url\nfront\nstatement\nupdate\nparts\naug\never\ndownloads\nearly\nmiles\nsound\nresource\n"
    "present\napplications\neither\nago\ndocument\nword\nworks\nmaterial\nbill\napr\nwritten\ntalk\n"
    "federal\nhosting\nrules\nfinal\nadult\ntickets\nthing\ncentre\nrequirements\nvia\ncheap\nnude\n"
    "kids\nfinance\ntrue\nminutes\nelse\nmark\nthird\nrock\ngifts\neurope\nreading\ntopics\n"
    "bad\nindividual\ntips\nplus\nauto\ncover\nusually\nedit\ntogether\nvideos\npercent\nfast\n"
    "function\nfact\nunit\ngetting\nglobal\ntech\nmeet\nfar\neconomic\nen\nplayer\nprojects\n"
    "lyrics\noften\nsubscribe\nsubmit\ngermany\namount\nwatch\nincluded\nfeel\nthough\nbank\nrisk\n"
    "thanks\neverything\ndeals\nvarious\nwords\nlinux\njul\nproduction\ncommercial\njames\nweight\ntown\n"
    "heart\nadvertising\nreceived\nchoose\ntreatment\nnewsletter\narchives\npoints\nknowledge\nmagazine\nerror\ncamera\n"
    "jun\ngirl\ncurrently\nconstruction\ntoys\nregistered\nclear\ngolf\nreceive\ndomain\nmethods\nchapter\n"
    "makes\nprotection\npolicies\nloan\nwide\nbeauty\nmanager\nindia\nposition\ntaken\nsort\nlistings\n"
    "models\nmichael\nknown\nhalf\ncases\nstep\nengineering\nflorida\nsimple\nquick\nnone\nwireless\n"
    "license\npaul\nfriday\nlake\nwhole\nannual\npublished\nlater\nbasic\nsony\nshows\ncorporate\n"
    "google\nchurch\nmethod\npurchase\ncustomers\nactive\nresponse\npractice\nhardware\nfigure\nmaterials\nfire\n"
    "holiday\nchat\nenough\ndesigned\nalong\namong\ndeath\nwriting\nspeed\nhtml\ncountries\nloss\n"
    "face\nbrand\ndiscount\nhigher\neffects\ncreated\nremember\nstandards\noil\nbit\nyellow\npolitical\n"
    "increase\nadvertise\nkingdom\nbase\nnear\nenvironmental\nthought\nstuff\nfrench\nstorage\noh\njapan\n"
    "doing\nloans\nshoes\nentry\nstay\nnature\norders\navailability\nafrica\nsummary\nturn\nmean\n"
    "growth\nnotes\nagency\nking\nmonday\neuropean\nactivity\ncopy\nalthough\ndrug\npics\nwestern\n"
    "income\nforce\ncash\nemployment\noverall\nbay\nriver\ncommission\nad\npackage\ncontents\nseen\n"
    "players\nengine\nport\nalbum\nregional\nstop\nsupplies\nstarted\nadministration\nbar\ninstitute\nviews\n"
    "plans\ndouble\ndog\nbuild\nscreen\nexchange\ntypes\nsoon\nsponsored\nlines\nelectronic\ncontinue\n"
    "across\nbenefits\nneeded\nseason\napply\nsomeone\nheld\nny\nanything\nprinter\ncondition\neffective\n"
    "believe\norganization\neffect\nasked\neur\nmind\nsunday\nselection\ncasino\npdf\nlost\ntour\n"
    "menu\nvolume\ncross\nanyone\nmortgage\nhope\nsilver\ncorporation\nwish\ninside\nsolution\nmature\n"
    "role\nrather\nweeks\naddition\ncame\nsupply\nnothing\ncertain\nusr\nexecutive\nrunning\nlower\n"
    "necessary\nunion\njewelry\naccording\ndc\nclothing\nmon\ncom\nparticular\nfine\nnames\nrobert\n"
    "homepage\nhour\ngas\nskills\nsix\nbush\nislands\nadvice\ncareer\nmilitary\nrental\ndecision\n"
    "leave\nbritish\nteens\npre\nhuge\nsat\nwoman\nfacilities\nzip\nbid\nkind\nsellers\n"
    "middle\nmove\ncable\nopportunities\ntaking\nvalues\ndivision\ncoming\ntuesday\nobject\nlesbian\nappropriate\n"
    "machine\nlogo\nlength\nactually\nnice\nscore\nstatistics\nclient\nok\nreturns\ncapital\nfollow\n"
    "sample\ninvestment\nsent\nshown\nsaturday\nchristmas\nengland\nculture\nband\nflash\nms\nlead\n"
    "george\nchoice\nwent\nstarting\nregistration\nfri\nthursday\ncourses\nconsumer\nhi\nairport\nforeign\n"
    "artist\noutside\nfurniture\nlevels\nchannel\nletter\nmode\nphones\nideas\nwednesday\nstructure\nfund\n"
    "summer\nallow\ndegree\ncontract\nbutton\nreleases\nwed\nhomes\nsuper\nmale\nmatter\ncustom\n"
    "virginia\nalmost\ntook\nlocated\nmultiple\nasian\ndistribution\neditor\ninn\nindustrial\ncause\npotential\n"
    "song\ncnet\nltd\nlos\nhp\nfocus\nlate\nfall\nfeatured\nidea\nrooms\nfemale\n"
    "responsible\ninc\ncommunications\nwin\nassociated\nthomas\nprimary\ncancer\nnumbers\nreason\ntool\nbrowser\n"
    "spring\nfoundation\nanswer\nvoice\neg\nfriendly\nschedule\ndocuments\ncommunication\npurpose\nfeature\nbed\n"
    "comes\npolice\neveryone\nindependent\nip\napproach\ncameras\nbrown\nphysical\noperating\nhill\nmaps\n"
    "medicine\ndeal\nhold\nratings\nchicago\nforms\nglass\nhappy\ntue\nsmith\nwanted\ndeveloped\n"
    "thank\nsafe\nunique\nsurvey\nprior\ntelephone\nsport\nready\nfeed\nanimal\nsources\nmexico\n"
    "population\npa\nregular\nsecure\nnavigation\noperations\ntherefore\nass\nsimply\nevidence\nstation\nchristian\n"
    "round\npaypal\nfavorite\nunderstand\noption\nmaster\nvalley\nrecently\nprobably\nthu\nrentals\nsea\n"
    "built\npublications\nblood\ncut\nworldwide\nimprove\nconnection\npublisher\nhall\nlarger\nanti\nnetworks\n"
    "earth\nparents\nnokia\nimpact\ntransfer\nintroduction\nkitchen\nstrong\ntel\ncarolina\nwedding\nproperties\n"
    "hospital\nground\noverview\nship\naccommodation\nowners\ndisease\ntx\nexcellent\npaid\nitaly\nperfect\n"
    "hair\nopportunity\nkit\nclassic\nbasis\ncommand\ncities\nwilliam\nexpress\nanal\naward\ndistance\n"
    "tree\npeter\nassessment\nensure\nthus\nwall\nie\ninvolved\nel\nextra\nespecially\ninterface\n"
    "pussy\npartners\nbudget\nrated\nguides\nsuccess\nmaximum\nma\noperation\nexisting\nquite\nselected\n"
    "boy\namazon\npatients\nrestaurants\nbeautiful\nwarning\nwine\nlocations\nhorse\nvote\nforward\nflowers\n"
    "stars\nsignificant\nlists\ntechnologies\nowner\nretail\nanimals\nuseful\ndirectly\nmanufacturer\nways\nest\n"
    "son\nproviding\nrule\nmac\nhousing\ntakes\niii\ngmt\nbring\ncatalog\nsearches\nmax\n"
    "trying\nmother\nauthority\nconsidered\ntold\nxml\ntraffic\nprogramme\njoined\ninput\nstrategy\nfeet\n"
    "agent\nvalid\nbin\nmodern\nsenior\nireland\nsexy\nteaching\ndoor\ngrand\ntesting\ntrial\n"
    "charge\nunits\ninstead\ncanadian\ncool\nnormal\nwrote\nenterprise\nships\nentire\neducational\nmd\n"
    "leading\nmetal\npositive\nfl\nfitness\nchinese\nopinion\nmb\nasia\nfootball\nabstract\nuses\n"
    "output\nfunds\nmr\ngreater\nlikely\ndevelop\nemployees\nartists\nalternative\nprocessing\nresponsibility\nresolution\n"
    "java\nguest\nseems\npublication\npass\nrelations\ntrust\nvan\ncontains\nsession\nmulti\nphotography\n"
    "republic\nfees\ncomponents\nvacation\ncentury\nacademic\nassistance\ncompleted\nskin\ngraphics\nindian\nprev\n"
    "ads\nmary\nil\nexpected\nring\ngrade\ndating\npacific\nmountain\norganizations\npop\nfilter\n"
    "mailing\nvehicle\nlonger\nconsider\nint\nnorthern\nbehind\npanel\nfloor\ngerman\nbuying\nmatch\n"
    "proposed\ndefault\nrequire\niraq\nboys\noutdoor\ndeep\nmorning\notherwise\nallows\nrest\nprotein\n"
    "plant\nreported\nhit\ntransportation\nmm\npool\nmini\npolitics\npartner\ndisclaimer\nauthors\nboards\n"
    "faculty\nparties\nfish\nmembership\nmission\neye\nstring\nsense\nmodified\npack\nreleased\nstage\n"
    "internal\ngoods\nrecommended\nborn\nunless\nrichard\ndetailed\njapanese\nrace\napproved\nbackground\ntarget\n"
    "except\ncharacter\nusb\nmaintenance\nability\nmaybe\nfunctions\ned\nmoving\nbrands\nplaces\nphp\n"
    "pretty\ntrademarks\nphentermine\nspain\nsouthern\nyourself\netc\nwinter\nrape\nbattery\nyouth\npressure\n"
    "submitted\nboston\nincest\ndebt\nkeywords\nmedium\ntelevision\ninterested\ncore\nbreak\npurposes\nthroughout\n"
    "sets\ndance\nwood\nmsn\nitself\ndefined\npapers\nplaying\nawards\nfee\nstudio\nreader\n"
    "virtual\ndevice\nestablished\nanswers\nrent\nlas\nremote\ndark\nprogramming\nexternal\napple\nle\n"
    "regarding\ninstructions\nmin\noffered\ntheory\nenjoy\nremove\naid\nsurface\nminimum\nvisual\nhost\n"
    "variety\nteachers\nisbn\nmartin\nmanual\nblock\nsubjects\nagents\nincreased\nrepair\nfair\ncivil\n"
    "steel\nunderstanding\nsongs\nfixed\nwrong\nbeginning\nhands\nassociates\nfinally\naz\nupdates\ndesktop\n"
    "classes\nparis\nohio\ngets\nsector\ncapacity\nrequires\njersey\nun\nfat\nfully\nfather\n"
    "electric\nsaw\ninstruments\nquotes\nofficer\ndriver\nbusinesses\ndead\nrespect\nunknown\nspecified\nrestaurant\n"
    "mike\ntrip\npst\nworth\nmi\nprocedures\npoor\nteacher\nxxx\neyes\nrelationship\nworkers\n"
    "farm\nfucking\ngeorgia\npeace\ntraditional\ncampus\ntom\nshowing\ncreative\ncoast\nbenefit\nprogress\n"
    "funding\ndevices\nlord\ngrant\nsub\nagree\nfiction\nhear\nsometimes\nwatches\ncareers\nbeyond\n"
    "goes\nfamilies\nled\nmuseum\nthemselves\nfan\ntransport\ninteresting\nblogs\nwife\nevaluation\naccepted\n"
    "former\nimplementation\nten\nhits\nzone\ncomplex\nth\ncat\ngalleries\nreferences\ndie\npresented\n"
    "jack\nflat\nflow\nagencies\nliterature\nrespective\nparent\nspanish\nmichigan\ncolumbia\nsetting\ndr\n"
    "scale\nstand\neconomy\nhighest\nhelpful\nmonthly\ncritical\nframe\nmusical\ndefinition\nsecretary\nangeles\n"
    "networking\npath\naustralian\nemployee\nchief\ngives\nkb\nbottom\nmagazines\npackages\ndetail\nfrancisco\n"
    "laws\nchanged\npet\nheard\nbegin\nindividuals\ncolorado\nroyal\nclean\nswitch\nrussian\nlargest\n"
    "african\nguy\ntitles\nrelevant\nguidelines\njustice\nconnect\nbible\ndev\ncup\nbasket\napplied\n"
    "weekly\nvol\ninstallation\ndescribed\ndemand\npp\nsuite\nvegas\nna\nsquare\nchris\nattention\n"
    "advance\nskip\ndiet\narmy\nauction\ngear\nlee\nos\ndifference\nallowed\ncorrect\ncharles\n"
    "nation\nselling\nlots\npiece\nsheet\nfirm\nseven\nolder\nillinois\nregulations\nelements\nspecies\n"
    "jump\ncells\nmodule\nresort\nfacility\nrandom\npricing\ndvds\ncertificate\nminister\nmotion\nlooks\n"
    "fashion\ndirections\nvisitors\ndocumentation\nmonitor\ntrading\nforest\ncalls\nwhose\ncoverage\ncouple\ngiving\n"
    "chance\nvision\nball\nending\nclients\nactions\nlisten\ndiscuss\naccept\nautomotive\nnaked\ngoal\n"
    "successful\nsold\nwind\ncommunities\nclinical\nsituation\nsciences\nmarkets\nlowest\nhighly\npublishing\nappear\n"
    "emergency\ndeveloping\nlives\ncurrency\nleather\ndetermine\nmilf\ntemperature\npalm\nannouncements\npatient\nactual\n"
    "historical\nstone\nbob\ncommerce\nringtones\nperhaps\npersons\ndifficult\nscientific\nsatellite\nfit\ntests\n"
    "village\naccounts\namateur\nex\nmet\npain\nxbox\nparticularly\nfactors\ncoffee\nwww\nsettings\n"
    "cum\nbuyer\ncultural\nsteve\neasily\noral\nford\nposter\nedge\nfunctional\nroot\nau\n"
    "fi\nclosed\nholidays\nice\npink\nzealand\nbalance\nmonitoring\ngraduate\nreplies\nshot\nnc\n"
    "architecture\ninitial\nlabel\nthinking\nscott\nllc\nsec\nrecommend\ncanon\nhardcore\nleague\nwaste\n"
    "minute\nbus\nprovider\noptional\ndictionary\ncold\naccounting\nmanufacturing\nsections\nchair\nfishing\neffort\n"
    "phase\nfields\nbag\nfantasy\npo\nletters\nmotor\nva\nprofessor\ncontext\ninstall\nshirt\n"
    "apparel\ngenerally\ncontinued\nfoot\nmass\ncrime\ncount\nbreast\ntechniques\nibm\nrd\njohnson\n"
    "sc\nquickly\ndollars\nwebsites\nreligion\nclaim\ndriving\npermission\nsurgery\npatch\nheat\nwild\n"
    "measures\ngeneration\nkansas\nmiss\nchemical\ndoctor\ntask\nreduce\nbrought\nhimself\nnor\ncomponent\n"
    "enable\nexercise\nbug\nsanta\nmid\nguarantee\nleader\ndiamond\nisrael\nse\nprocesses\nsoft\n"
    "servers\nalone\nmeetings\nseconds\njones\narizona\nkeyword\ninterests\nflight\ncongress\nfuel\nusername\n"
    "walk\nfuck\nproduced\nitalian\npaperback\nclassifieds\nwait\nsupported\npocket\nsaint\nrose\nfreedom\n"
    "argument\ncompetition\ncreating\njim\ndrugs\njoint\npremium\nproviders\nfresh\ncharacters\nattorney\nupgrade\n"
    "di\nfactor\ngrowing\nthousands\nkm\nstream\napartments\npick\nhearing\neastern\nauctions\ntherapy\n"
    "entries\ndates\ngenerated\nsigned\nupper\nadministrative\nserious\nprime\nsamsung\nlimit\nbegan\nlouis\n"
    "steps\nerrors\nshops\nbondage\ndel\nefforts\ninformed\nga\nac\nthoughts\ncreek\nft\n"
    "worked\nquantity\nurban\npractices\nsorted\nreporting\nessential\nmyself\ntours\nplatform\nload\naffiliate\n"
    "labor\nimmediately\nadmin\nnursing\ndefense\nmachines\ndesignated\ntags\nheavy\ncovered\nrecovery\njoe\n"
    "guys\nintegrated\nconfiguration\ncock\nmerchant\ncomprehensive\nexpert\nuniversal\nprotect\ndrop\nsolid\ncds\n"
    "presentation\nlanguages\nbecame\norange\ncompliance\nvehicles\nprevent\ntheme\nrich\nim\ncampaign\nmarine\n"
    "improvement\nvs\nguitar\nfinding\npennsylvania\nexamples\nipod\nsaying\nspirit\nar\nclaims\nporno\n"
    "challenge\nmotorola\nacceptance\nstrategies\nmo\nseem\naffairs\ntouch\nintended\ntowards\nsa\ngoals\n"
    "hire\nelection\nsuggest\nbranch\ncharges\nserve\naffiliates\nreasons\nmagic\nmount\nsmart\ntalking\n"
    "gave\nones\nlatin\nmultimedia\nxp\ntits\navoid\ncertified\nmanage\ncorner\nrank\ncomputing\n"
    "oregon\nelement\nbirth\nvirus\nabuse\ninteractive\nrequests\nseparate\nquarter\nprocedure\nleadership\ntables\n"
    "define\nracing\nreligious\nfacts\nbreakfast\nkong\ncolumn\nplants\nfaith\nchain\ndeveloper\nidentify\n"
    "avenue\nmissing\ndied\napproximately\ndomestic\nsitemap\nrecommendations\nmoved\nhouston\nreach\ncomparison\nmental\n"
    "viewed\nmoment\nextended\nsequence\ninch\nattack\nsorry\ncenters\nopening\ndamage\nlab\nreserve\n"
    "recipes\ncvs\ngamma\nplastic\nproduce\nsnow\nplaced\ntruth\ncounter\nfailure\nfollows\neu\n"
    "weekend\ndollar\ncamp\nontario\nautomatically\ndes\nminnesota\nfilms\nbridge\nnative\nfill\nwilliams\n"
    "movement\nprinting\nbaseball\nowned\napproval\ndraft\nchart\nplayed\ncontacts\ncc\njesus\nreaders\n"
    "clubs\nlcd\nwa\njackson\nequal\nadventure\nmatching\noffering\nshirts\nprofit\nleaders\nposters\n"
    "institutions\nassistant\nvariable\nave\ndj\nadvertisement\nexpect\nparking\nheadlines\nyesterday\ncompared\ndetermined\n"
    "wholesale\nworkshop\nrussia\ngone\ncodes\nkinds\nextension\nseattle\nstatements\ngolden\ncompletely\nteams\n"
    "fort\ncm\nwi\nlighting\nsenate\nforces\nfunny\nbrother\ngene\nturned\nportable\ntried\n"
    "electrical\napplicable\ndisc\nreturned\npattern\nct\nhentai\nboat\nnamed\ntheatre\nlaser\nearlier\n"
    "manufacturers\nsponsor\nclassical\nicon\nwarranty\ndedicated\nindiana\ndirection\nharry\nbasketball\nobjects\nends\n"
    "delete\nevening\nassembly\nnuclear\ntaxes\nmouse\nsignal\ncriminal\nissued\nbrain\nsexual\nwisconsin\n"
    "powerful\ndream\nobtained\nfalse\nda\ncast\nflower\nfelt\npersonnel\npassed\nsupplied\nidentified\n"
    "falls\npic\nsoul\naids\nopinions\npromote\nstated\nstats\nhawaii\nprofessionals\nappears\ncarry\n"
    "flag\ndecided\nnj\ncovers\nhr\nem\nadvantage\nhello\ndesigns\nmaintain\ntourism\npriority\n"
    "newsletters\nadults\nclips\nsavings\niv\ngraphic\natom\npayments\nrw\nestimated\nbinding\nbrief\n"
    "ended\nwinning\neight\nanonymous\niron\nstraight\nscript\nserved\nwants\nmiscellaneous\nprepared\nvoid\n"
    "dining\nalert\nintegration\natlanta\ndakota\ntag\ninterview\nmix\nframework\ndisk\ninstalled\nqueen\n"
    "vhs\ncredits\nclearly\nfix\nhandle\nsweet\ndesk\ncriteria\npubmed\ndave\nmassachusetts\ndiego\n"
    "hong\nvice\nassociate\nne\ntruck\nbehavior\nenlarge\nray\nfrequently\nrevenue\nmeasure\nchanging\n"
    "votes\ndu\nduty\nlooked\ndiscussions\nbear\ngain\nfestival\nlaboratory\nocean\nflights\nexperts\n"
    "signs\nlack\ndepth\niowa\nwhatever\nlogged\nlaptop\nvintage\ntrain\nexactly\ndry\nexplore\n"
    "maryland\nspa\nconcept\nnearly\neligible\ncheckout\nreality\nforgot\nhandling\norigin\nknew\ngaming\n"
    "feeds\nbillion\ndestination\nscotland\nfaster\nintelligence\ndallas\nbought\ncon\nups\nnations\nroute\n"
    "followed\nspecifications\nbroken\ntripadvisor\nfrank\nalaska\nzoom\nblow\nbattle\nresidential\nanime\nspeak\n"
    "decisions\nindustries\nprotocol\nquery\nclip\npartnership\neditorial\nnt\nexpression\nes\nequity\nprovisions\n"
    "speech\nwire\nprinciples\nsuggestions\nrural\nshared\nsounds\nreplacement\ntape\nstrategic\njudge\nspam\n"
    "economics\nacid\nbytes\ncent\nforced\ncompatible\nfight\napartment\nheight\nnull\nzero\nspeaker\n"
    "filed\ngb\nnetherlands\nobtain\nbc\nconsulting\nrecreation\noffices\ndesigner\nremain\nmanaged\npr\n"
    "failed\nmarriage\nroll\nkorea\nbanks\nfr\nparticipants\nsecret\nbath\naa\nkelly\nleads\n"
    "negative\naustin\nfavorites\ntoronto\ntheater\nsprings\nmissouri\nandrew\nvar\nperform\nhealthy\ntranslation\n"
    "estimates\nfont\nassets\ninjury\nmt\njoseph\nministry\ndrivers\nlawyer\nfigures\nmarried\nprotected\n"
    "proposal\nsharing\nphiladelphia\nportal\nwaiting\nbirthday\nbeta\nfail\ngratis\nbanking\nofficials\nbrian\n"
    "toward\nwon\nslightly\nassist\nconduct\ncontained\nlingerie\nshemale\nlegislation\ncalling\nparameters\njazz\n"
    "serving\nbags\nprofiles\nmiami\ncomics\nmatters\nhouses\ndoc\npostal\nrelationships\ntennessee\nwear\n"
    "controls\nbreaking\ncombined\nultimate\nwales\nrepresentative\nfrequency\nintroduced\nminor\nfinish\ndepartments\nresidents\n"
    "noted\ndisplayed\nmom\nreduced\nphysics\nrare\nspent\nperformed\nextreme\nsamples\ndavis\ndaniel\n"
    "bars\nreviewed\nrow\noz\nforecast\nremoved\nhelps\nsingles\nadministrator\ncycle\namounts\ncontain\n"
    "accuracy\ndual\nrise\nusd\nsleep\nmg\nbird\npharmacy\nbrazil\ncreation\nstatic\nscene\n"
    "hunter\naddresses\nlady\ncrystal\nfamous\nwriter\nchairman\nviolence\nfans\noklahoma\nspeakers\ndrink\n"
    "academy\ndynamic\ngender\neat\npermanent\nagriculture\ndell\ncleaning\nconstitutes\nportfolio\npractical\ndelivered\n"
    "collectibles\ninfrastructure\nexclusive\nseat\nconcerns\ncolour\nvendor\noriginally\nintel\nutilities\nphilosophy\nregulation\n"
    "officers\nreduction\naim\nbids\nreferred\nsupports\nnutrition\nrecording\nregions\njunior\ntoll\nles\n"
    "cape\nann\nrings\nmeaning\ntip\nsecondary\nwonderful\nmine\nladies\nhenry\nticket\nannounced\n"
    "guess\nagreed\nprevention\nwhom\nski\nsoccer\nmath\nimport\nposting\npresence\ninstant\nmentioned\n"
    "automatic\nhealthcare\nviewing\nmaintained\nch\nincreasing\nmajority\nconnected\nchrist\ndan\ndogs\nsd\n"
    "directors\naspects\naustria\nahead\nmoon\nparticipation\nscheme\nutility\npreview\nfly\nmanner\nmatrix\n"
    "containing\ncombination\ndevel\namendment\ndespite\nstrength\nguaranteed\nturkey\nlibraries\nproper\ndistributed\ndegrees\n"
    "singapore\nenterprises\ndelta\nfear\nseeking\ninches\nphoenix\nrs\nconvention\nshares\nprincipal\ndaughter\n"
    "standing\nvoyeur\ncomfort\ncolors\nwars\ncisco\nordering\nkept\nalpha\nappeal\ncruise\nbonus\n"
    "certification\npreviously\nhey\nbookmark\nbuildings\nspecials\nbeat\ndisney\nhousehold\nbatteries\nadobe\nsmoking\n"
    "bbc\nbecomes\ndrives\narms\nalabama\ntea\nimproved\ntrees\navg\nachieve\npositions\ndress\n"
    "subscription\ndealer\ncontemporary\nsky\nutah\nnearby\nrom\ncarried\nhappen\nexposure\npanasonic\nhide\n"
    "permalink\nsignature\ngambling\nrefer\nmiller\nprovision\noutdoors\nclothes\ncaused\nluxury\nbabes\nframes\n"
    "viagra\ncertainly\nindeed\nnewspaper\ntoy\ncircuit\nlayer\nprinted\nslow\nremoval\neasier\nsrc\n"
    "liability\ntrademark\nhip\nprinters\nfaqs\nnine\nadding\nkentucky\nmostly\neric\nspot\ntaylor\n"
    "trackback\nprints\nspend\nfactory\ninterior\nrevised\ngrow\namericans\noptical\npromotion\nrelative\namazing\n"
    "clock\ndot\nhiv\nidentity\nsuites\nconversion\nfeeling\nhidden\nreasonable\nvictoria\nserial\nrelief\n"
    "revision\nbroadband\ninfluence\nratio\npda\nimportance\nrain\nonto\ndsl\nplanet\nwebmaster\ncopies\n"
    "recipe\nzum\npermit\nseeing\nproof\ndna\ndiff\ntennis\nbass\nprescription\nbedroom\nempty\n"
    "instance\nhole\npets\nride\nlicensed\norlando\nspecifically\ntim\nbureau\nmaine\nsql\nrepresent\n"
    "conservation\npair\nideal\nspecs\nrecorded\ndon\npieces\nfinished\nparks\ndinner\nlawyers\nsydney\n"
    "stress\ncream\nss\nruns\ntrends\nyeah\ndiscover\nsexo\nap\npatterns\nboxes\nlouisiana\n"
    "hills\njavascript\nfourth\nnm\nadvisor\nmn\nmarketplace\nnd\nevil\naware\nwilson\nshape\n"
    "evolution\nirish\ncertificates\nobjectives\nstations\nsuggested\ngps\nop\nremains\nacc\ngreatest\nfirms\n"
    "concerned\neuro\noperator\nstructures\ngeneric\nencyclopedia\nusage\ncap\nink\ncharts\ncontinuing\nmixed\n"
    "census\ninterracial\npeak\ntn\ncompetitive\nexist\nwheel\ntransit\ndick\nsuppliers\nsalt\ncompact\n"
    "poetry\nlights\ntracking\nangel\nbell\nkeeping\npreparation\nattempt\nreceiving\nmatches\naccordance\nwidth\n"
    "noise\nengines\nforget\narray\ndiscussed\naccurate\nstephen\nelizabeth\nclimate\nreservations\npin\nplaystation\n"
    "alcohol\ngreek\ninstruction\nmanaging\nannotation\nsister\nraw\ndifferences\nwalking\nexplain\nsmaller\nnewest\n"
    "establish\ngnu\nhappened\nexpressed\njeff\nextent\nsharp\nlesbians\nben\nlane\nparagraph\nkill\n"
    "mathematics\naol\ncompensation\nce\nexport\nmanagers\naircraft\nmodules\nsweden\nconflict\nconducted\nversions\n"
    "employer\noccur\npercentage\nknows\nmississippi\ndescribe\nconcern\nbackup\nrequested\ncitizens\nconnecticut\nheritage\n"
    "personals\nimmediate\nholding\ntrouble\nspread\ncoach\nkevin\nagricultural\nexpand\nsupporting\naudience\nassigned\n"
    "jordan\ncollections\nages\nparticipate\nplug\nspecialist\ncook\naffect\nvirgin\nexperienced\ninvestigation\nraised\n"
    "hat\ninstitution\ndirected\ndealers\nsearching\nsporting\nhelping\nperl\naffected\nlib\nbike\ntotally\n"
    "plate\nexpenses\nindicate\nblonde\nab\nproceedings\nfavourite\ntransmission\nanderson\nutc\ncharacteristics\nder\n"
    "lose\norganic\nseek\nexperiences\nalbums\ncheats\nextremely\nverzeichnis\ncontracts\nguests\nhosted\ndiseases\n"
    "concerning\ndevelopers\nequivalent\nchemistry\ntony\nneighborhood\nnevada\nkits\nthailand\nvariables\nagenda\nanyway\n"
    "continues\ntracks\nadvisory\ncam\ncurriculum\nlogic\ntemplate\nprince\ncircle\nsoil\ngrants\nanywhere\n"
    "psychology\nresponses\natlantic\nwet\ncircumstances\nedward\ninvestor\nidentification\nram\nleaving\nwildlife\nappliances\n"
    "matt\nelementary\ncooking\nspeaking\nsponsors\nfox\nunlimited\nrespond\nsizes\nplain\nexit\nentered\n"
    "iran\narm\nkeys\nlaunch\nwave\nchecking\ncosta\nbelgium\nprintable\nholy\nacts\nguidance\n"
    "mesh\ntrail\nenforcement\nsymbol\ncrafts\nhighway\nbuddy\nhardcover\nobserved\ndean\nsetup\npoll\n"
    "booking\nglossary\nfiscal\ncelebrity\nstyles\ndenver\nunix\nfilled\nbond\nchannels\nericsson\nappendix\n"
    "notify\nblues\nchocolate\npub\nportion\nscope\nhampshire\nsupplier\ncables\ncotton\nbluetooth\ncontrolled\n"
    "requirement\nauthorities\nbiology\ndental\nkilled\nborder\nancient\ndebate\nrepresentatives\nstarts\npregnancy\ncauses\n"
    "arkansas\nbiography\nleisure\nattractions\nlearned\ntransactions\nnotebook\nexplorer\nhistoric\nattached\nopened\ntm\n"
    "husband\ndisabled\nauthorized\ncrazy\nupcoming\nbritain\nconcert\nretirement\nscores\nfinancing\nefficiency\nsp\n"
    "comedy\nadopted\nefficient\nweblog\nlinear\ncommitment\nspecialty\nbears\njean\nhop\ncarrier\nedited\n"
    "constant\nvisa\nmouth\njewish\nmeter\nlinked\nportland\ninterviews\nconcepts\nnh\ngun\nreflect\n"
    "pure\ndeliver\nwonder\nhell\nlessons\nfruit\nbegins\nqualified\nreform\nlens\nalerts\ntreated\n"
    "discovery\ndraw\nmysql\nclassified\nrelating\nassume\nconfidence\nalliance\nfm\nconfirm\nwarm\nneither\n"
    "lewis\nhoward\noffline\nleaves\nengineer\nlifestyle\nconsistent\nreplace\nclearance\nconnections\ninventory\nconverter\n"
    "suck\norganisation\nbabe\nchecks\nreached\nbecoming\nblowjob\nsafari\nobjective\nindicated\nsugar\ncrew\n"
    "legs\nsam\nstick\nsecurities\nallen\npdt\nrelation\nenabled\ngenre\nslide\nmontana\nvolunteer\n"
    "tested\nrear\ndemocratic\nenhance\nswitzerland\nexact\nbound\nparameter\nadapter\nprocessor\nnode\nformal\n"
    "dimensions\ncontribute\nlock\nhockey\nstorm\nmicro\ncolleges\nlaptops\nmile\nshowed\nchallenges\neditors\n"
    "mens\nthreads\nbowl\nsupreme\nbrothers\nrecognition\npresents\nref\ntank\nsubmission\ndolls\nestimate\n"
    "encourage\nnavy\nkid\nregulatory\ninspection\nconsumers\ncancel\nlimits\nterritory\ntransaction\nmanchester\nweapons\n"
    "paint\ndelay\npilot\noutlet\ncontributions\ncontinuous\ndb\nczech\nresulting\ncambridge\ninitiative\nnovel\n"
    "pan\nexecution\ndisability\nincreases\nultra\nwinner\nidaho\ncontractor\nph\nepisode\nexamination\npotter\n"
    "dish\nplays\nbulletin\nia\npt\nindicates\nmodify\noxford\nadam\ntruly\nepinions\npainting\n"
    "committed\nextensive\naffordable\nuniverse\ncandidate\ndatabases\npatent\nslot\npsp\noutstanding\nha\neating\n"
    "perspective\nplanned\nwatching\nlodge\nmessenger\nmirror\ntournament\nconsideration\nds\ndiscounts\nsterling\nsessions\n"
    "kernel\nboobs\nstocks\nbuyers\njournals\ngray\ncatalogue\nea\njennifer\nantonio\ncharged\nbroad\n"
    "taiwan\nund\nchosen\ndemo\ngreece\nlg\nswiss\nsarah\nclark\nlabour\nhate\nterminal\n"
    "publishers\nnights\nbehalf\ncaribbean\nliquid\nrice\nnebraska\nloop\nsalary\nreservation\nfoods\ngourmet\n"
    "guard\nproperly\norleans\nsaving\nnfl\nremaining\nempire\nresume\ntwenty\nnewly\nraise\nprepare\n"
    "avatar\ngary\ndepending\nillegal\nexpansion\nvary\nhundreds\nrome\narab\nlincoln\nhelped\npremier\n"
    "tomorrow\npurchased\nmilk\ndecide\nconsent\ndrama\nvisiting\nperforming\ndowntown\nkeyboard\ncontest\ncollected\n"
    "nw\nbands\nboot\nsuitable\nff\nabsolutely\nmillions\nlunch\ndildo\naudit\npush\nchamber\n"
    "guinea\nfindings\nmuscle\nfeaturing\niso\nimplement\nclicking\nscheduled\npolls\ntypical\ntower\nyours\n"
    "sum\nmisc\ncalculator\nsignificantly\nchicken\ntemporary\nattend\nshower\nalan\nsending\njason\ntonight\n"
    "dear\nsufficient\nholdem\nshell\nprovince\ncatholic\noak\nvat\nawareness\nvancouver\ngovernor\nbeer\n"
    "seemed\ncontribution\nmeasurement\nswimming\nspyware\nformula\nconstitution\npackaging\nsolar\njose\ncatch\njane\n"
    "pakistan\nps\nreliable\nconsultation\nnorthwest\nsir\ndoubt\nearn\nfinder\nunable\nperiods\nclassroom\n"
    "tasks\ndemocracy\nattacks\nkim\nwallpaper\nmerchandise\nconst\nresistance\ndoors\nsymptoms\nresorts\nbiggest\n"
    "memorial\nvisitor\ntwin\nforth\ninsert\nbaltimore\ngateway\nky\ndont\nalumni\ndrawing\ncandidates\n"
    "charlotte\nordered\nbiological\nfighting\ntransition\nhappens\npreferences\nspy\nromance\ninstrument\nbruce\nsplit\n"
    "themes\npowers\nheaven\nbr\nbits\npregnant\ntwice\nclassification\nfocused\negypt\nphysician\nhollywood\n"
    "bargain\nwikipedia\ncellular\nnorway\nvermont\nasking\nblocks\nnormally\nlo\nspiritual\nhunting\ndiabetes\n"
    "suit\nml\nshift\nchip\nres\nsit\nbodies\nphotographs\ncutting\nwow\nsimon\nwriters\n"
    "marks\nflexible\nloved\nfavourites\nmapping\nnumerous\nrelatively\nbirds\nsatisfaction\nrepresents\nchar\nindexed\n"
    "pittsburgh\nsuperior\npreferred\nsaved\npaying\ncartoon\nshots\nintellectual\nmoore\ngranted\nchoices\ncarbon\n"
    "spending\ncomfortable\nmagnetic\ninteraction\nlistening\neffectively\nregistry\ncrisis\noutlook\nmassive\ndenmark\nemployed\n"
    "bright\ntreat\nheader\ncs\npoverty\nformed\npiano\necho\nque\ngrid\nsheets\npatrick\n"
    "experimental\npuerto\nrevolution\nconsolidation\ndisplays\nplasma\nallowing\nearnings\nvoip\nmystery\nlandscape\ndependent\n"
    "mechanical\njourney\ndelaware\nbidding\nconsultants\nrisks\nbanner\napplicant\ncharter\nfig\nbarbara\ncooperation\n"
    "counties\nacquisition\nports\nimplemented\nsf\ndirectories\nrecognized\ndreams\nblogger\nnotification\nkg\nlicensing\n"
    "stands\nteach\noccurred\ntextbooks\nrapid\npull\nhairy\ndiversity\ncleveland\nut\nreverse\ndeposit\n"
    "seminar\ninvestments\nlatina\nnasa\nwheels\nsexcam\nspecify\naccessibility\ndutch\nsensitive\ntemplates\nformats\n"
    "tab\ndepends\nboots\nholds\nrouter\nconcrete\nsi\nediting\npoland\nfolder\nwomens\ncss\n"
    "completion\nupload\npulse\nuniversities\ntechnique\ncontractors\nmilfhunter\nvoting\ncourts\nnotices\nsubscriptions\ncalculate\n"
    "mc\ndetroit\nalexander\nbroadcast\nconverted\nmetro\ntoshiba\nanniversary\nimprovements\nstrip\nspecification\npearl\n"
    "accident\nnick\naccessible\naccessory\nresident\nplot\nqty\npossibly\nairline\ntypically\nrepresentation\nregard\n"
    "pump\nexists\narrangements\nsmooth\nconferences\nuniprotkb\nbeastiality\nstrike\nconsumption\nbirmingham\nflashing\nlp\n"
    "narrow\nafternoon\nthreat\nsurveys\nsitting\nputting\nconsultant\ncontroller\nownership\ncommittees\npenis\nlegislative\n"
    "researchers\nvietnam\ntrailer\nanne\ncastle\ngardens\nmissed\nmalaysia\nunsubscribe\nantique\nlabels\nwilling\n"
    "bio\nmolecular\nupskirt\nacting\nheads\nstored\nexam\nlogos\nresidence\nattorneys\nmilfs\nantiques\n"
    "density\nhundred\nryan\noperators\nstrange\nsustainable\nphilippines\nstatistical\nbeds\nbreasts\nmention\ninnovation\n"
    "pcs\nemployers\ngrey\nparallel\nhonda\namended\noperate\nbills\nbold\nbathroom\nstable\nopera\n"
    "definitions\nvon\ndoctors\nlesson\ncinema\nasset\nag\nscan\nelections\ndrinking\nblowjobs\nreaction\n"
    "blank\nenhanced\nentitled\nsevere\ngenerate\nstainless\nnewspapers\nhospitals\nvi\ndeluxe\nhumor\naged\n"
    "monitors\nexception\nlived\nduration\nbulk\nsuccessfully\nindonesia\npursuant\nsci\nfabric\nedt\nvisits\n"
    "primarily\ntight\ndomains\ncapabilities\npmid\ncontrast\nrecommendation\nflying\nrecruitment\nsin\nberlin\ncute\n"
    "organized\nba\npara\nsiemens\nadoption\nimproving\ncr\nexpensive\nmeant\ncapture\npounds\nbuffalo\n"
    "organisations\nplane\npg\nexplained\nseed\nprogrammes\ndesire\nexpertise\nmechanism\ncamping\nee\njewellery\n"
    "meets\nwelfare\npeer\ncaught\neventually\nmarked\ndriven\nmeasured\nmedline\nbottle\nagreements\nconsidering\n"
    "innovative\nmarshall\nmassage\nrubber\nconclusion\nclosing\ntampa\nthousand\nmeat\nlegend\ngrace\nsusan\n"
    "ing\nks\nadams\npython\nmonster\nalex\nbang\nvilla\nbone\ncolumns\ndisorders\nbugs\n"
    "collaboration\nhamilton\ndetection\nftp\ncookies\ninner\nformation\ntutorial\nmed\nengineers\nentity\ncruises\n"
    "gate\nholder\nproposals\nmoderator\nsw\ntutorials\nsettlement\nportugal\nlawrence\nroman\nduties\nvaluable\n"
    "erotic\ntone\ncollectables\nethics\nforever\ndragon\nbusy\ncaptain\nfantastic\nimagine\nbrings\nheating\n"
    "leg\nneck\nhd\nwing\ngovernments\npurchasing\nscripts\nabc\nstereo\nappointed\ntaste\ndealing\n"
    "commit\ntiny\noperational\nrail\nairlines\nliberal\nlivecam\njay\ntrips\ngap\nsides\ntube\n"
    "turns\ncorresponding\ndescriptions\ncache\nbelt\njacket\ndetermination\nanimation\noracle\ner\nmatthew\nlease\n"
    "productions\naviation\nhobbies\nproud\nexcess\ndisaster\nconsole\ncommands\njr\ntelecommunications\ninstructor\ngiant\n"
    "achieved\ninjuries\nshipped\nbestiality\nseats\napproaches\nbiz\nalarm\nvoltage\nanthony\nnintendo\nusual\n"
    "loading\nstamps\nappeared\nfranklin\nangle\nrob\nvinyl\nhighlights\nmining\ndesigners\nmelbourne\nongoing\n"
    "worst\nimaging\nbetting\nscientists\nliberty\nwyoming\nblackjack\nargentina\nera\nconvert\npossibility\nanalyst\n"
    "commissioner\ndangerous\ngarage\nexciting\nreliability\nthongs\ngcc\nunfortunately\nrespectively\nvolunteers\nattachment\nringtone\n"
    "finland\nmorgan\nderived\npleasure\nhonor\nasp\noriented\neagle\ndesktops\npants\ncolumbus\nnurse\n"
    "prayer\nappointment\nworkshops\nhurricane\nquiet\nluck\npostage\nproducer\nrepresented\nmortgages\ndial\nresponsibilities\n"
    "cheese\ncomic\ncarefully\njet\nproductivity\ninvestors\ncrown\npar\nunderground\ndiagnosis\nmaker\ncrack\n"
    "principle\npicks\nvacations\ngang\nsemester\ncalculated\ncumshot\nfetish\napplies\ncasinos\nappearance\nsmoke\n"
    "apache\nfilters\nincorporated\nnv\ncraft\ncake\nnotebooks\napart\nfellow\nblind\nlounge\nmad\n"
    "algorithm\nsemi\ncoins\nandy\ngross\nstrongly\ncafe\nvalentine\nhilton\nken\nproteins\nhorror\n"
    "su\nexp\nfamiliar\ncapable\ndouglas\ndebian\ntill\ninvolving\npen\ninvesting\nchristopher\nadmission\n"
    "epson\nshoe\nelected\ncarrying\nvictory\nsand\nmadison\nterrorism\njoy\neditions\ncpu\nmainly\n"
    "ethnic\nran\nparliament\nactor\nfinds\nseal\nsituations\nfifth\nallocated\ncitizen\nvertical\ncorrections\n"
    "structural\nmunicipal\ndescribes\nprize\nsr\noccurs\njon\nabsolute\ndisabilities\nconsists\nanytime\nsubstance\n"
    "prohibited\naddressed\nlies\npipe\nsoldiers\nnr\nguardian\nlecture\nsimulation\nlayout\ninitiatives\nill\n"
    "concentration\nclassics\nlbs\nlay\ninterpretation\nhorses\nlol\ndirty\ndeck\nwayne\ndonate\ntaught\n"
    "bankruptcy\nmp\nworker\noptimization\nalive\ntemple\nsubstances\nprove\ndiscovered\nwings\nbreaks\ngenetic\n"
    "restrictions\nparticipating\nwaters\npromise\nthin\nexhibition\nprefer\nridge\ncabinet\nmodem\nharris\nmph\n"
    "bringing\nsick\ndose\nevaluate\ntiffany\ntropical\ncollect\nbet\ncomposition\ntoyota\nstreets\nnationwide\n"
    "vector\ndefinitely\nshaved\nturning\nbuffer\npurple\nexistence\ncommentary\nlarry\nlimousines\ndevelopments\ndef\n"
    "immigration\ndestinations\nlets\nmutual\npipeline\nnecessarily\nsyntax\nli\nattribute\nprison\nskill\nchairs\n"
    "nl\neveryday\napparently\nsurrounding\nmountains\nmoves\npopularity\ninquiry\nethernet\nchecked\nexhibit\nthrow\n"
    "trend\nsierra\nvisible\ncats\ndesert\npostposted\nya\noldest\nrhode\nnba\nbusty\ncoordinator\n"
    "obviously\nmercury\nsteven\nhandbook\ngreg\nnavigate\nworse\nsummit\nvictims\nepa\nspaces\nfundamental\n"
    "burning\nescape\ncoupons\nsomewhat\nreceiver\nsubstantial\ntr\nprogressive\ncialis\nbb\nboats\nglance\n"
    "scottish\nchampionship\narcade\nrichmond\nsacramento\nimpossible\nron\nrussell\ntells\nobvious\nfiber\ndepression\n"
    "graph\ncovering\nplatinum\njudgment\nbedrooms\ntalks\nfiling\nfoster\nmodeling\npassing\nawarded\ntestimonials\n"
    "trials\ntissue\nnz\nmemorabilia\nclinton\nmasters\nbonds\ncartridge\nalberta\nexplanation\nfolk\norg\n"
    "commons\ncincinnati\nsubsection\nfraud\nelectricity\npermitted\nspectrum\narrival\nokay\npottery\nemphasis\nroger\n"
    "aspect\nworkplace\nawesome\nmexican\nconfirmed\ncounts\npriced\nwallpapers\nhist\ncrash\nlift\ndesired\n"
    "inter\ncloser\nassumes\nheights\nshadow\nriding\ninfection\nfirefox\nlisa\nexpense\ngrove\neligibility\n"
    "venture\nclinic\nkorean\nhealing\nprincess\nmall\nentering\npacket\nspray\nstudios\ninvolvement\ndad\n"
    "buttons\nplacement\nobservations\nvbulletin\nfunded\nthompson\nwinners\nextend\nroads\nsubsequent\npat\ndublin\n"
    "rolling\nfell\nmotorcycle\nyard\ndisclosure\nestablishment\nmemories\nnelson\nte\narrived\ncreates\nfaces\n"
    "tourist\ncocks\nav\nmayor\nmurder\nsean\nadequate\nsenator\nyield\npresentations\ngrades\ncartoons\n"
    "pour\ndigest\nreg\nlodging\ntion\ndust\nhence\nwiki\nentirely\nreplaced\nradar\nrescue\n"
    "undergraduate\nlosses\ncombat\nreducing\nstopped\noccupation\nlakes\nbutt\ndonations\nassociations\ncitysearch\nclosely\n"
    "radiation\ndiary\nseriously\nkings\nshooting\nkent\nadds\nnsw\near\nflags\npci\nbaker\n"
    "launched\nelsewhere\npollution\nconservative\nguestbook\nshock\neffectiveness\nwalls\nabroad\nebony\ntie\nward\n"
    "drawn\narthur\nian\nvisited\nroof\nwalker\ndemonstrate\natmosphere\nsuggests\nkiss\nbeast\nra\n"
    "operated\nexperiment\ntargets\noverseas\npurchases\ndodge\ncounsel\nfederation\npizza\ninvited\nyards\nassignment\n"
    "chemicals\ngordon\nmod\nfarmers\nrc\nqueries\nbmw\nrush\nukraine\nabsence\nnearest\ncluster\n"
    "vendors\nmpeg\nwhereas\nyoga\nserves\nwoods\nsurprise\nlamp\nrico\npartial\nshoppers\nphil\n"
    "everybody\ncouples\nnashville\nranking\njokes\ncst\nhttp\nceo\nsimpson\ntwiki\nsublime\ncounseling\n"
    "palace\nacceptable\nsatisfied\nglad\nwins\nmeasurements\nverify\nglobe\ntrusted\ncopper\nmilwaukee\nrack\n"
    "medication\nwarehouse\nshareware\nec\nrep\ndicke\nkerry\nreceipt\nsupposed\nordinary\nnobody\nghost\n"
    "violation\nconfigure\nstability\nmit\napplying\nsouthwest\nboss\npride\ninstitutional\nexpectations\nindependence\nknowing\n"
    "reporter\nmetabolism\nkeith\nchampion\ncloudy\nlinda\nross\npersonally\nchile\nanna\nplenty\nsolo\n"
    "sentence\nthroat\nignore\nmaria\nuniform\nexcellence\nwealth\ntall\nrm\nsomewhere\nvacuum\ndancing\n"
    "attributes\nrecognize\nbrass\nwrites\nplaza\npdas\noutcomes\nsurvival\nquest\npublish\nsri\nscreening\n"
    "toe\nthumbnail\ntrans\njonathan\nwhenever\nnova\nlifetime\napi\npioneer\nbooty\nforgotten\nacrobat\n"
    "plates\nacres\nvenue\nathletic\nthermal\nessays\nbehaviour\nvital\ntelling\nfairly\ncoastal\nconfig\n"
    "cf\ncharity\nintelligent\nedinburgh\nvt\nexcel\nmodes\nobligation\ncampbell\nwake\nstupid\nharbor\n"
    "hungary\ntraveler\nurw\nsegment\nrealize\nregardless\nlan\nenemy\npuzzle\nrising\naluminum\nwells\n"
    "wishlist\nopens\ninsight\nsms\nshit\nrestricted\nrepublican\nsecrets\nlucky\nlatter\nmerchants\nthick\n"
    "trailers\nrepeat\nsyndrome\nphilips\nattendance\npenalty\ndrum\nglasses\nenables\nnec\niraqi\nbuilder\n"
    "vista\njessica\nchips\nterry\nflood\nfoto\nease\narguments\namsterdam\norgy\narena\nadventures\n"
    "pupils\nstewart\nannouncement\ntabs\noutcome\nxx\nappreciate\nexpanded\ncasual\ngrown\npolish\nlovely\n"
    "extras\ngm\ncentres\njerry\nclause\nsmile\nlands\nri\ntroops\nindoor\nbulgaria\narmed\n"
    "broker\ncharger\nregularly\nbelieved\npine\ncooling\ntend\ngulf\nrt\nrick\ntrucks\ncp\n"
    "mechanisms\ndivorce\nlaura\nshopper\ntokyo\npartly\nnikon\ncustomize\ntradition\ncandy\npills\ntiger\n"
    "donald\nfolks\nsensor\nexposed\ntelecom\nhunt\nangels\ndeputy\nindicators\nsealed\nthai\nemissions\n"
    "physicians\nloaded\nfred\ncomplaint\nscenes\nexperiments\nballs\nafghanistan\ndd\nboost\nspanking\nscholarship\n"
    "governance\nmill\nfounded\nsupplements\nchronic\nicons\ntranny\nmoral\nden\ncatering\naud\nfinger\n"
    "keeps\npound\nlocate\ncamcorder\npl\ntrained\nburn\nimplementing\nroses\nlabs\nourselves\nbread\n"
    "tobacco\nwooden\nmotors\ntough\nroberts\nincident\ngonna\ndynamics\nlie\ncrm\nrf\nconversation\n"
    "decrease\ncumshots\nchest\npension\nbilly\nrevenues\nemerging\nworship\nbukkake\ncapability\nak\nfe\n"
    "craig\nherself\nproducing\nchurches\nprecision\ndamages\nreserves\ncontributed\nsolve\nshorts\nreproduction\nminority\n"
    "td\ndiverse\namp\ningredients\nsb\nah\njohnny\nsole\nfranchise\nrecorder\ncomplaints\nfacing\n"
    "sm\nnancy\npromotions\ntones\npassion\nrehabilitation\nmaintaining\nsight\nlaid\nclay\ndefence\npatches\n"
    "weak\nrefund\nusc\ntowns\nenvironments\ntrembl\ndivided\nblvd\nreception\namd\nwise\nemails\n"
    "cyprus\nwv\nodds\ncorrectly\ninsider\nseminars\nconsequences\nmakers\nhearts\ngeography\nappearing\nintegrity\n"
    "worry\nns\ndiscrimination\neve\ncarter\nlegacy\nmarc\npleased\ndanger\nvitamin\nwidely\nprocessed\n"
    "phrase\ngenuine\nraising\nimplications\nfunctionality\nparadise\nhybrid\nreads\nroles\nintermediate\nemotional\nsons\n"
    "leaf\npad\nglory\nplatforms\nja\nbigger\nbilling\ndiesel\nversus\ncombine\novernight\ngeographic\n"
    "exceed\nbs\nrod\nsaudi\nfault\ncuba\nhrs\npreliminary\ndistricts\nintroduce\nsilk\npromotional\n"
    "kate\nchevrolet\nbabies\nbi\nkaren\ncompiled\nromantic\nrevealed\nspecialists\ngenerator\nalbert\nexamine\n"
    "jimmy\ngraham\nsuspension\nbristol\nmargaret\ncompaq\nsad\ncorrection\nwolf\nslowly\nauthentication\ncommunicate\n"
    "rugby\nsupplement\nshowtimes\ncal\nportions\ninfant\npromoting\nsectors\nsamuel\nfluid\ngrounds\nfits\n"
    "kick\nregards\nmeal\nta\nhurt\nmachinery\nbandwidth\nunlike\nequation\nbaskets\nprobability\npot\n"
    "dimension\nwright\nimg\nbarry\nproven\nschedules\nadmissions\ncached\nwarren\nslip\nstudied\nreviewer\n"
    "involves\nquarterly\nrpm\nprofits\ndevil\ngrass\ncomply\nmarie\nflorist\nillustrated\ncherry\ncontinental\n"
    "alternate\ndeutsch\nachievement\nlimitations\nkenya\nwebcam\ncuts\nfuneral\nnutten\nearrings\nenjoyed\nautomated\n"
    "chapters\npee\ncharlie\nquebec\nnipples\npassenger\nconvenient\ndennis\nmars\nfrancis\ntvs\nsized\n"
    "manga\nnoticed\nsocket\nsilent\nliterary\negg\nmhz\nsignals\ncaps\norientation\npill\ntheft\n"
    "childhood\nswing\nsymbols\nlat\nmeta\nhumans\nanalog\nfacial\nchoosing\ntalent\ndated\nflexibility\n"
    "seeker\nwisdom\nshoot\nboundary\nmint\npackard\noffset\npayday\nphilip\nelite\ngi\nspin\n"
    "holders\nbelieves\nswedish\npoems\ndeadline\njurisdiction\nrobot\ndisplaying\nwitness\ncollins\nequipped\nstages\n"
    "encouraged\nsur\nwinds\npowder\nbroadway\nacquired\nassess\nwash\ncartridges\nstones\nentrance\ngnome\n"
    "roots\ndeclaration\nlosing\nattempts\ngadgets\nnoble\nglasgow\nautomation\nimpacts\nrev\ngospel\nadvantages\n"
    "shore\nloves\ninduced\nll\nknight\npreparing\nloose\naims\nrecipient\nlinking\nextensions\nappeals\n"
    "cl\nearned\nillness\nislamic\nathletics\nsoutheast\nieee\nho\nalternatives\npending\nparker\ndetermining\n"
    "lebanon\ncorp\npersonalized\nkennedy\ngt\nsh\nconditioning\nteenage\nsoap\nae\ntriple\ncooper\n"
    "nyc\nvincent\njam\nsecured\nunusual\nanswered\npartnerships\ndestruction\nslots\nincreasingly\nmigration\ndisorder\n"
    "routine\ntoolbar\nbasically\nrocks\nconventional\ntitans\napplicants\nwearing\naxis\nsought\ngenes\nmounted\n"
    "habitat\nfirewall\nmedian\nguns\nscanner\nherein\noccupational\nanimated\nhorny\njudicial\nrio\nhs\n"
    "adjustment\nhero\ninteger\ntreatments\nbachelor\nattitude\ncamcorders\nengaged\nfalling\nbasics\nmontreal\ncarpet\n"
    "rv\nstruct\nlenses\nbinary\ngenetics\nattended\ndifficulty\npunk\ncollective\ncoalition\npi\ndropped\n"
    "enrollment\nduke\nwalter\nai\npace\nbesides\nwage\nproducers\not\ncollector\narc\nhosts\n"
    "interfaces\nadvertisers\nmoments\natlas\nstrings\ndawn\nrepresenting\nobservation\nfeels\ntorture\ncarl\ndeleted\n"
    "coat\nmitchell\nmrs\nrica\nrestoration\nconvenience\nreturning\nralph\nopposition\ncontainer\nyr\ndefendant\n"
    "warner\nconfirmation\napp\nembedded\ninkjet\nsupervisor\nwizard\ncorps\nactors\nliver\nperipherals\nliable\n"
    "brochure\nmorris\nbestsellers\npetition\neminem\nrecall\nantenna\npicked\nassumed\ndeparture\nminneapolis\nbelief\n"
    "killing\nbikini\nmemphis\nshoulder\ndecor\nlookup\ntexts\nharvard\nbrokers\nroy\nion\ndiameter\n"
    "ottawa\ndoll\nic\npodcast\ntit\nseasons\nperu\ninteractions\nrefine\nbidder\nsinger\nevans\n"
    "herald\nliteracy\nfails\naging\nnike\nintervention\npissing\nfed\nplugin\nattraction\ndiving\ninvite\n"
    "modification\nalice\nlatinas\nsuppose\ncustomized\nreed\ninvolve\nmoderate\nterror\nyounger\nthirty\nmice\n"
    "opposite\nunderstood\nrapidly\ndealtime\nban\ntemp\nintro\nmercedes\nzus\nassurance\nfisting\nclerk\n"
    "happening\nvast\nmills\noutline\namendments\ntramadol\nholland\nreceives\njeans\nmetropolitan\ncompilation\nverification\n"
    "fonts\nent\nodd\nwrap\nrefers\nmood\nfavor\nveterans\nquiz\nmx\nsigma\ngr\n"
    "attractive\nxhtml\noccasion\nrecordings\njefferson\nvictim\ndemands\nsleeping\ncareful\next\nbeam\ngardening\n"
    "obligations\narrive\norchestra\nsunset\ntracked\nmoreover\nminimal\npolyphonic\nlottery\ntops\nframed\naside\n"
    "outsourcing\nlicence\nadjustable\nallocation\nmichelle\nessay\ndiscipline\namy\nts\ndemonstrated\ndialogue\nidentifying\n"
    "alphabetical\ncamps\ndeclared\ndispatched\naaron\nhandheld\ntrace\ndisposal\nshut\nflorists\npacks\nge\n"
    "installing\nswitches\nromania\nvoluntary\nncaa\nthou\nconsult\nphd\ngreatly\nblogging\nmask\ncycling\n"
    "midnight\nng\ncommonly\npe\nphotographer\ninform\nturkish\ncoal\ncry\nmessaging\npentium\nquantum\n"
    "murray\nintent\ntt\nzoo\nlargely\npleasant\nannounce\nconstructed\nadditions\nrequiring\nspoke\naka\n"
    "arrow\nengagement\nsampling\nrough\nweird\ntee\nrefinance\nlion\ninspired\nholes\nweddings\nblade\n"
    "suddenly\noxygen\ncookie\nmeals\ncanyon\ngoto\nmeters\nmerely\ncalendars\narrangement\nconclusions\npasses\n"
    "bibliography\npointer\ncompatibility\nstretch\ndurham\nfurthermore\npermits\ncooperative\nmuslim\nxl\nneil\nsleeve\n"
    "netscape\ncleaner\ncricket\nbeef\nfeeding\nstroke\ntownship\nrankings\nmeasuring\ncad\nhats\nrobin\n"
    "robinson\njacksonville\nstrap\nheadquarters\nsharon\ncrowd\ntcp\ntransfers\nsurf\nolympic\ntransformation\nremained\n"
    "attachments\ndv\ndir\nentities\ncustoms\nadministrators\npersonality\nrainbow\nhook\nroulette\ndecline\ngloves\n"
    "israeli\nmedicare\ncord\nskiing\ncloud\nfacilitate\nsubscriber\nvalve\nval\nhewlett\nexplains\nproceed\n"
    "flickr\nfeelings\nknife\njamaica\npriorities\nshelf\nbookstore\ntiming\nliked\nparenting\nadopt\ndenied\n"
    "fotos\nincredible\nbritney\nfreeware\nfucked\ndonation\nouter\ncrop\ndeaths\nrivers\ncommonwealth\npharmaceutical\n"
    "manhattan\ntales\nkatrina\nworkforce\nislam\nnodes\ntu\nfy\nthumbs\nseeds\ncited\nlite\n"
    "ghz\nhub\ntargeted\norganizational\nskype\nrealized\ntwelve\nfounder\ndecade\ngamecube\nrr\ndispute\n"
    "portuguese\ntired\ntitten\nadverse\neverywhere\nexcerpt\neng\nsteam\ndischarge\nef\ndrinks\nace\n"
    "voices\nacute\nhalloween\nclimbing\nstood\nsing\ntons\nperfume\ncarol\nhonest\nalbany\nhazardous\n"
    "restore\nstack\nmethodology\nsomebody\nsue\nep\nhousewares\nreputation\nresistant\ndemocrats\nrecycling\nhang\n"
    "gbp\ncurve\ncreator\namber\nqualifications\nmuseums\ncoding\nslideshow\ntracker\nvariation\npassage\ntransferred\n"
    "trunk\nhiking\nlb\ndamn\npierre\njelsoft\nheadset\nphotograph\noakland\ncolombia\nwaves\ncamel\n"
    "distributor\nlamps\nunderlying\nhood\nwrestling\nsuicide\narchived\nphotoshop\njp\nchi\nbt\narabia\n"
    "gathering\nprojection\njuice\nchase\nmathematical\nlogical\nsauce\nfame\nextract\nspecialized\ndiagnostic\npanama\n"
    "indianapolis\naf\npayable\ncorporations\ncourtesy\ncriticism\nautomobile\nconfidential\nrfc\nstatutory\naccommodations\nathens\n"
    "northeast\ndownloaded\njudges\nsl\nseo\nretired\nisp\nremarks\ndetected\ndecades\npaintings\nwalked\n"
    "arising\nnissan\nbracelet\nins\neggs\njuvenile\ninjection\nyorkshire\npopulations\nprotective\nafraid\nacoustic\n"
    "railway\ncassette\ninitially\nindicator\npointed\nhb\njpg\ncausing\nmistake\nnorton\nlocked\neliminate\n"
    "tc\nfusion\nmineral\nsunglasses\nruby\nsteering\nbeads\nfortune\npreference\ncanvas\nthreshold\nparish\n"
    "claimed\nscreens\ncemetery\nplanner\ncroatia\nflows\nstadium\nvenezuela\nexploration\nmins\nfewer\nsequences\n"
    "coupon\nnurses\nssl\nstem\nproxy\ngangbang\nastronomy\nlanka\nopt\nedwards\ndrew\ncontests\n"
    "flu\ntranslate\nannounces\nmlb\ncostume\ntagged\nberkeley\nvoted\nkiller\nbikes\ngates\nadjusted\n"
    "rap\ntune\nbishop\npulled\ncorn\ngp\nshaped\ncompression\nseasonal\nestablishing\nfarmer\ncounters\n"
    "puts\nconstitutional\ngrew\nperfectly\ntin\nslave\ninstantly\ncultures\nnorfolk\ncoaching\nexamined\ntrek\n"
    "encoding\nlitigation\nsubmissions\noem\nheroes\npainted\nlycos\nir\nzdnet\nbroadcasting\nhorizontal\nartwork\n"
    "cosmetic\nresulted\nportrait\nterrorist\ninformational\nethical\ncarriers\necommerce\nmobility\nfloral\nbuilders\nties\n"
    "struggle\nschemes\nsuffering\nneutral\nfisher\nrat\nspears\nprospective\ndildos\nbedding\nultimately\njoining\n"
    "heading\nequally\nartificial\nbearing\nspectacular\ncoordination\nconnector\nbrad\ncombo\nseniors\nworlds\nguilty\n"
    "affiliated\nactivation\nnaturally\nhaven\ntablet\njury\ndos\ntail\nsubscribers\ncharm\nlawn\nviolent\n"
    "mitsubishi\nunderwear\nbasin\nsoup\npotentially\nranch\nconstraints\ncrossing\ninclusive\ndimensional\ncottage\ndrunk\n"
    "considerable\ncrimes\nresolved\nmozilla\nbyte\ntoner\nnose\nlatex\nbranches\nanymore\noclc\ndelhi\n"
    "holdings\nalien\nlocator\nselecting\nprocessors\npantyhose\nplc\nbroke\nnepal\nzimbabwe\ndifficulties\njuan\n"
    "complexity\nmsg\nconstantly\nbrowsing\nresolve\nbarcelona\npresidential\ndocumentary\ncod\nterritories\nmelissa\nmoscow\n"
    "thesis\nthru\njews\nnylon\npalestinian\ndiscs\nrocky\nbargains\nfrequent\ntrim\nnigeria\nceiling\n"
    "pixels\nensuring\nhispanic\ncv\ncb\nlegislature\nhospitality\ngen\nanybody\nprocurement\ndiamonds\nespn\n"
    "fleet\nuntitled\nbunch\ntotals\nmarriott\nsinging\ntheoretical\nafford\nexercises\nstarring\nreferral\nnhl\n"
    "surveillance\noptimal\nquit\ndistinct\nprotocols\nlung\nhighlight\nsubstitute\ninclusion\nhopefully\nbrilliant\nturner\n"
    "sucking\ncents\nreuters\nti\nfc\ngel\ntodd\nspoken\nomega\nevaluated\nstayed\ncivic\n"
    "assignments\nfw\nmanuals\ndoug\nsees\ntermination\nwatched\nsaver\nthereof\ngrill\nhouseholds\ngs\n"
    "redeem\nrogers\ngrain\naaa\nauthentic\nregime\nwanna\nwishes\nbull\nmontgomery\narchitectural\nlouisville\n"
    "depend\ndiffer\nmacintosh\nmovements\nranging\nmonica\nrepairs\nbreath\namenities\nvirtually\ncole\nmart\n"
    "candle\nhanging\ncolored\nauthorization\ntale\nverified\nlynn\nformerly\nprojector\nbp\nsituated\ncomparative\n"
    "std\nseeks\nherbal\nloving\nstrictly\nrouting\ndocs\nstanley\npsychological\nsurprised\nretailer\nvitamins\n"
    "elegant\ngains\nrenewal\nvid\ngenealogy\nopposed\ndeemed\nscoring\nexpenditure\npanties\nbrooklyn\nliverpool\n"
    "sisters\ncritics\nconnectivity\nspots\noo\nalgorithms\nhacker\nmadrid\nsimilarly\nmargin\ncoin\nbbw\n"
    "solely\nfake\nsalon\ncollaborative\nnorman\nfda\nexcluding\nturbo\nheaded\nvoters\ncure\nmadonna\n"
    "commander\narch\nni\nmurphy\nthinks\nthats\nsuggestion\nhdtv\nsoldier\nphillips\nasin\naimed\n"
    "justin\nbomb\nharm\ninterval\nmirrors\nspotlight\ntricks\nreset\nbrush\ninvestigate\nthy\nexpansys\n"
    "panels\nrepeated\nassault\nconnecting\nspare\nlogistics\ndeer\nkodak\ntongue\nbowling\ntri\ndanish\n"
    "pal\nmonkey\nproportion\nfilename\nskirt\nflorence\ninvest\nhoney\num\nanalyses\ndrawings\nsignificance\n"
    "scenario\nye\nfs\nlovers\natomic\napprox\nsymposium\narabic\ngauge\nessentials\njunction\nprotecting\n"
    "nn\nfaced\nmat\nrachel\nsolving\ntransmitted\nweekends\nscreenshots\nproduces\noven\nted\nintensive\n"
    "chains\nkingston\nsixth\nengage\ndeviant\nnoon\nswitching\nquoted\nadapters\ncorrespondence\nfarms\nimports\n"
    "supervision\ncheat\nbronze\nexpenditures\nsandy\nseparation\ntestimony\nsuspect\ncelebrities\nmacro\nsender\nmandatory\n"
    "boundaries\ncrucial\nsyndication\ngym\ncelebration\nkde\nadjacent\nfiltering\ntuition\nspouse\nexotic\nviewer\n"
    "signup\nthreats\nluxembourg\npuzzles\nreaching\nvb\ndamaged\ncams\nreceptor\npiss\nlaugh\njoel\n"
    "surgical\ndestroy\ncitation\npitch\nautos\nyo\npremises\nperry\nproved\noffensive\nimperial\ndozen\n"
    "benjamin\ndeployment\nteeth\ncloth\nstudying\ncolleagues\nstamp\nlotus\nsalmon\nolympus\nseparated\nproc\n"
    "cargo\ntan\ndirective\nfx\nsalem\nmate\ndl\nstarter\nupgrades\nlikes\nbutter\npepper\n"
    "weapon\nluggage\nburden\nchef\ntapes\nzones\nraces\nisle\nstylish\nslim\nmaple\nluke\n"
    "grocery\noffshore\ngoverning\nretailers\ndepot\nkenneth\ncomp\nalt\npie\nblend\nharrison\nls\n"
    "julie\noccasionally\ncbs\nattending\nemission\npete\nspec\nfinest\nrealty\njanet\nbow\npenn\n"
    "recruiting\napparent\ninstructional\nphpbb\nautumn\ntraveling\nprobe\nmidi\npermissions\nbiotechnology\ntoilet\nranked\n"
    "jackets\nroutes\npacked\nexcited\noutreach\nhelen\nmounting\nrecover\ntied\nlopez\nbalanced\nprescribed\n"
    "catherine\ntimely\ntalked\nupskirts\ndebug\ndelayed\nchuck\nreproduced\nhon\ndale\nexplicit\ncalculation\n"
    "villas\nebook\nconsolidated\nboob\nexclude\npeeing\noccasions\nbrooks\nequations\nnewton\noils\nsept\n"
    "exceptional\nanxiety\nbingo\nwhilst\nspatial\nrespondents\nunto\nlt\nceramic\nprompt\nprecious\nminds\n"
    "annually\nconsiderations\nscanners\natm\nxanax\neq\npays\ncox\nfingers\nsunny\nebooks\ndelivers\n"
    "je\nqueensland\nnecklace\nmusicians\nleeds\ncomposite\nunavailable\ncedar\narranged\nlang\ntheaters\nadvocacy\n"
    "raleigh\nstud\nfold\nessentially\ndesigning\nthreaded\nuv\nqualify\nfingering\nblair\nhopes\nassessments\n"
    "cms\nmason\ndiagram\nburns\npumps\nslut\nejaculation\nfootwear\nsg\nvic\nbeijing\npeoples\n"
    "victor\nmario\npos\nattach\nlicenses\nutils\nremoving\nadvised\nbrunswick\nspider\nphys\nranges\n"
    "pairs\nsensitivity\ntrails\npreservation\nhudson\nisolated\ncalgary\ninterim\nassisted\ndivine\nstreaming\napprove\n"
    "chose\ncompound\nintensity\ntechnological\nsyndicate\nabortion\ndialog\nvenues\nblast\nwellness\ncalcium\nnewport\n"
    "antivirus\naddressing\npole\ndiscounted\nindians\nshield\nharvest\nmembrane\nprague\npreviews\nbangladesh\nconstitute\n"
    "locally\nconcluded\npickup\ndesperate\nmothers\nnascar\niceland\ndemonstration\ngovernmental\nmanufactured\ncandles\ngraduation\n"
    "mega\nbend\nsailing\nvariations\nmoms\nsacred\naddiction\nmorocco\nchrome\ntommy\nspringfield\nrefused\n"
    "brake\nexterior\ngreeting\necology\noliver\ncongo\nglen\nbotswana\nnav\ndelays\nsynthesis\nolive\n"
    "undefined\nunemployment\ncyber\nverizon\nscored\nenhancement\nnewcastle\nclone\ndicks\nvelocity\nlambda\nrelay\n"
    "composed\ntears\nperformances\noasis\nbaseline\ncab\nangry\nfa\nsocieties\nsilicon\nbrazilian\nidentical\n"
    "petroleum\ncompete\nist\nnorwegian\nlover\nbelong\nhonolulu\nbeatles\nlips\nescort\nretention\nexchanges\n"
    "pond\nrolls\nthomson\nbarnes\nsoundtrack\nwondering\nmalta\ndaddy\nlc\nferry\nrabbit\nprofession\n"
    "seating\ndam\ncnn\nseparately\nphysiology\nlil\ncollecting\ndas\nexports\nomaha\ntire\nparticipant\n"
    "scholarships\nrecreational\ndominican\nchad\nelectron\nloads\nfriendship\nheather\npassport\nmotel\nunions\ntreasury\n"
    "warrant\nsys\nsolaris\nfrozen\noccupied\njosh\nroyalty\nscales\nrally\nobserver\nsunshine\nstrain\n"
    "drag\nceremony\nsomehow\narrested\nexpanding\nprovincial\ninvestigations\nicq\nripe\nyamaha\nrely\nmedications\n"
    "hebrew\ngained\nrochester\ndying\nlaundry\nstuck\nsolomon\nplacing\nstops\nhomework\nadjust\nassessed\n"
    "advertiser\nenabling\nencryption\nfilling\ndownloadable\nsophisticated\nimposed\nsilence\nscsi\nfocuses\nsoviet\npossession\n"
    "cu\nlaboratories\ntreaty\nvocal\ntrainer\norgan\nstronger\nvolumes\nadvances\nvegetables\nlemon\ntoxic\n"
    "dns\nthumbnails\ndarkness\npty\nws\nnuts\nnail\nbizrate\nvienna\nimplied\nspan\nstanford\n"
    "sox\nstockings\njoke\nrespondent\npacking\nstatute\nrejected\nsatisfy\ndestroyed\nshelter\nchapel\ngamespot\n"
    "manufacture\nlayers\nwordpress\nguided\nvulnerability\naccountability\ncelebrate\naccredited\nappliance\ncompressed\nbahamas\npowell\n"
    "mixture\nzoophilia\nbench\nuniv\ntub\nrider\nscheduling\nradius\nperspectives\nmortality\nlogging\nhampton\n"
    "christians\nborders\ntherapeutic\npads\nbutts\ninns\nbobby\nimpressive\nsheep\naccordingly\narchitect\nrailroad\n"
    "lectures\nchallenging\nwines\nnursery\nharder\ncups\nash\nmicrowave\ncheapest\naccidents\ntravesti\nrelocation\n"
    "stuart\ncontributors\nsalvador\nali\nsalad\nnp\nmonroe\ntender\nviolations\nfoam\ntemperatures\npaste\n"
    "clouds\ncompetitions\ndiscretion\ntft\ntanzania\npreserve\njvc\npoem\nvibrator\nunsigned\nstaying\ncosmetics\n"
    "easter\ntheories\nrepository\npraise\njeremy\nvenice\njo\nconcentrations\nvibrators\nestonia\nchristianity\nveteran\n"
    "streams\nlanding\nsigning\nexecuted\nkatie\nnegotiations\nrealistic\ndt\ncgi\nshowcase\nintegral\nasks\n"
    "relax\nnamibia\ngenerating\nchristina\ncongressional\nsynopsis\nhardly\nprairie\nreunion\ncomposer\nbean\nsword\n"
    "absent\nphotographic\nsells\necuador\nhoping\naccessed\nspirits\nmodifications\ncoral\npixel\nfloat\ncolin\n"
    "bias\nimported\npaths\nbubble\npor\nacquire\ncontrary\nmillennium\ntribune\nvessel\nacids\nfocusing\n"
    "viruses\ncheaper\nadmitted\ndairy\nadmit\nmem\nfancy\nequality\nsamoa\ngc\nachieving\ntap\n"
    "stickers\nfisheries\nexceptions\nreactions\nleasing\nlauren\nbeliefs\nci\nmacromedia\ncompanion\nsquad\nanalyze\n"
    "ashley\nscroll\nrelate\ndivisions\nswim\nwages\nadditionally\nsuffer\nforests\nfellowship\nnano\ninvalid\n"
    "concerts\nmartial\nmales\nvictorian\nretain\ncolours\nexecute\ntunnel\ngenres\ncambodia\npatents\ncopyrights\n"
    "yn\nchaos\nlithuania\nmastercard\nwheat\nchronicles\nobtaining\nbeaver\nupdating\ndistribute\nreadings\ndecorative\n"
    "kijiji\nconfused\ncompiler\nenlargement\neagles\nbases\nvii\naccused\nbee\ncampaigns\nunity\nloud\n"
    "conjunction\nbride\nrats\ndefines\nairports\ninstances\nindigenous\nbegun\ncfr\nbrunette\npackets\nanchor\n"
    "socks\nvalidation\nparade\ncorruption\nstat\ntrigger\nincentives\ncholesterol\ngathered\nessex\nslovenia\nnotified\n"
    "differential\nbeaches\nfolders\ndramatic\nsurfaces\nterrible\nrouters\ncruz\npendant\ndresses\nbaptist\nscientist\n"
    "starsmerchant\nhiring\nclocks\narthritis\nbios\nfemales\nwallace\nnevertheless\nreflects\ntaxation\nfever\npmc\n"
    "cuisine\nsurely\npractitioners\ntranscript\nmyspace\ntheorem\ninflation\nthee\nnb\nruth\npray\nstylus\n"
    "compounds\npope\ndrums\ncontracting\ntopless\narnold\nstructured\nreasonably\njeep\nchicks\nbare\nhung\n"
    "cattle\nmba\nradical\ngraduates\nrover\nrecommends\ncontrolling\ntreasure\nreload\ndistributors\nflame\nlevitra\n"
    "tanks\nassuming\nmonetary\nelderly\npit\narlington\nmono\nparticles\nfloating\nextraordinary\ntile\nindicating\n"
    "bolivia\nspell\nhottest\nstevens\ncoordinate\nkuwait\nexclusively\nemily\nalleged\nlimitation\nwidescreen\ncompile\n"
    "squirting\nwebster\nstruck\nrx\nillustration\nplymouth\nwarnings\nconstruct\napps\ninquiries\nbridal\nannex\n"
    "mag\ngsm\ninspiration\ntribal\ncurious\naffecting\nfreight\nrebate\nmeetup\neclipse\nsudan\nddr\n"
    "downloading\nrec\nshuttle\naggregate\nstunning\ncycles\naffects\nforecasts\ndetect\nsluts\nactively\nciao\n"
    "ampland\nknee\nprep\npb\ncomplicated\nchem\nfastest\nbutler\nshopzilla\ninjured\ndecorating\npayroll\n"
    "cookbook\nexpressions\nton\ncourier\nuploaded\nshakespeare\nhints\ncollapse\namericas\nconnectors\ntwinks\nunlikely\n"
    "oe\ngif\npros\nconflicts\ntechno\nbeverage\ntribute\nwired\nelvis\nimmune\nlatvia\ntravelers\n"
    "forestry\nbarriers\ncant\njd\nrarely\ngpl\ninfected\nofferings\nmartha\ngenesis\nbarrier\nargue\n"
    "incorrect\ntrains\nmetals\nbicycle\nfurnishings\nletting\narise\nguatemala\nceltic\nthereby\nirc\njamie\n"
    "particle\nperception\nminerals\nadvise\nhumidity\nbottles\nboxing\nwy\ndm\nbangkok\nrenaissance\npathology\n"
    "sara\nbra\nordinance\nhughes\nphotographers\nbitch\ninfections\njeffrey\nchess\noperates\nbrisbane\nconfigured\n"
    "survive\noscar\nfestivals\nmenus\njoan\npossibilities\nduck\nreveal\ncanal\namino\nphi\ncontributing\n"
    "herbs\nclinics\nmls\ncow\nmanitoba\nanalytical\nmissions\nwatson\nlying\ncostumes\nstrict\ndive\n"
    "saddam\ncirculation\ndrill\noffense\nthreesome\nbryan\ncet\nprotest\nhandjob\nassumption\njerusalem\nhobby\n"
    "tries\ntransexuales\ninvention\nnickname\nfiji\ntechnician\ninline\nexecutives\nenquiries\nwashing\naudi\nstaffing\n"
    "cognitive\nexploring\ntrick\nenquiry\nclosure\nraid\nppc\ntimber\nvolt\nintense\ndiv\nplaylist\n"
    "registrar\nshowers\nsupporters\nruling\nsteady\ndirt\nstatutes\nwithdrawal\nmyers\ndrops\npredicted\nwider\n"
    "saskatchewan\njc\ncancellation\nplugins\nenrolled\nsensors\nscrew\nministers\npublicly\nhourly\nblame\ngeneva\n"
    "freebsd\nveterinary\nacer\nprostores\nreseller\ndist\nhanded\nsuffered\nintake\ninformal\nrelevance\nincentive\n"
    "butterfly\ntucson\nmechanics\nheavily\nswingers\nfifty\nheaders\nmistakes\nnumerical\nons\ngeek\nuncle\n"
    "defining\nxnxx\ncounting\nreflection\nsink\naccompanied\nassure\ninvitation\ndevoted\nprinceton\njacob\nsodium\n"
    "randy\nspirituality\nhormone\nmeanwhile\nproprietary\ntimothy\nchildrens\nbrick\ngrip\nnaval\nthumbzilla\nmedieval\n"
    "porcelain\navi\nbridges\npichunter\ncaptured\nwatt\nthehun\ndecent\ncasting\ndayton\ntranslated\nshortly\n"
    "cameron\ncolumnists\npins\ncarlos\nreno\ndonna\nandreas\nwarrior\ndiploma\ncabin\ninnocent\nbdsm\n"
    "scanning\nide\nconsensus\npolo\nvalium\ncopying\nrpg\ndelivering\ncordless\npatricia\nhorn\neddie\n"
    "uganda\nfired\njournalism\npd\nprot\ntrivia\nadidas\nperth\nfrog\ngrammar\nintention\nsyria\n"
    "disagree\nklein\nharvey\ntires\nlogs\nundertaken\ntgp\nhazard\nretro\nleo\nlivesex\nstatewide\n"
    "semiconductor\ngregory\nepisodes\nboolean\ncircular\nanger\ndiy\nmainland\nillustrations\nsuits\nchances\ninteract\n"
    "snap\nhappiness\narg\nsubstantially\nbizarre\nglenn\nur\nauckland\nolympics\nfruits\nidentifier\ngeo\n"
    "worldsex\nribbon\ncalculations\ndoe\njpeg\nconducting\nstartup\nsuzuki\ntrinidad\nati\nkissing\nwal\n"
    "handy\nswap\nexempt\ncrops\nreduces\naccomplished\ncalculators\ngeometry\nimpression\nabs\nslovakia\nflip\n"
    "guild\ncorrelation\ngorgeous\ncapitol\nsim\ndishes\nrna\nbarbados\nchrysler\nnervous\nrefuse\nextends\n"
    "fragrance\nmcdonald\nreplica\nplumbing\nbrussels\ntribe\nneighbors\ntrades\nsuperb\nbuzz\ntransparent\nnuke\n"
    "rid\ntrinity\ncharleston\nhandled\nlegends\nboom\ncalm\nchampions\nfloors\nselections\nprojectors\ninappropriate\n"
    "exhaust\ncomparing\nshanghai\nspeaks\nburton\nvocational\ndavidson\ncopied\nscotia\nfarming\ngibson\npharmacies\n"
    "fork\ntroy\nln\nroller\nintroducing\nbatch\norganize\nappreciated\nalter\nnicole\nlatino\nghana\n"
    "edges\nuc\nmixing\nhandles\nskilled\nfitted\nalbuquerque\nharmony\ndistinguished\nasthma\nprojected\nassumptions\n"
    "shareholders\ntwins\ndevelopmental\nrip\nzope\nregulated\ntriangle\namend\nanticipated\noriental\nreward\nwindsor\n"
    "zambia\ncompleting\ngmbh\nbuf\nld\nhydrogen\nwebshots\nsprint\ncomparable\nchick\nadvocate\nsims\n"
    "confusion\ncopyrighted\ntray\ninputs\nwarranties\ngenome\nescorts\ndocumented\nthong\nmedal\npaperbacks\ncoaches\n"
    "vessels\nharbour\nwalks\nsucks\nsol\nkeyboards\nsage\nknives\neco\nvulnerable\narrange\nartistic\n"
    "bat\nhonors\nbooth\nindie\nreflected\nunified\nbones\nbreed\ndetector\nignored\npolar\nfallen\n"
    "precise\nsussex\nrespiratory\nnotifications\nmsgid\ntransexual\nmainstream\ninvoice\nevaluating\nlip\nsubcommittee\nsap\n"
    "gather\nsuse\nmaternity\nbacked\nalfred\ncolonial\nmf\ncarey\nmotels\nforming\nembassy\ncave\n"
    "journalists\ndanny\nrebecca\nslight\nproceeds\nindirect\namongst\nwool\nfoundations\nmsgstr\narrest\nvolleyball\n"
    "mw\nadipex\nhorizon\nnu\ndeeply\ntoolbox\nict\nmarina\nliabilities\nprizes\nbosnia\nbrowsers\n"
    "decreased\npatio\ndp\ntolerance\nsurfing\ncreativity\nlloyd\ndescribing\noptics\npursue\nlightning\novercome\n"
    "eyed\nou\nquotations\ngrab\ninspector\nattract\nbrighton\nbeans\nbookmarks\nellis\ndisable\nsnake\n"
    "succeed\nleonard\nlending\noops\nreminder\nnipple\nxi\nsearched\nbehavioral\nriverside\nbathrooms\nplains\n"
    "sku\nht\nraymond\ninsights\nabilities\ninitiated\nsullivan\nza\nmidwest\nkaraoke\ntrap\nlonely\n"
    "fool\nve\nnonprofit\nlancaster\nsuspended\nhereby\nobserve\njulia\ncontainers\nattitudes\nkarl\nberry\n"
    "collar\nsimultaneously\nracial\nintegrate\nbermuda\namanda\nsociology\nmobiles\nscreenshot\nexhibitions\nkelkoo\nconfident\n"
    "retrieved\nexhibits\nofficially\nconsortium\ndies\nterrace\nbacteria\npts\nreplied\nseafood\nnovels\nrh\n"
    "rrp\nrecipients\nplayboy\nought\ndelicious\ntraditions\nfg\njail\nsafely\nfinite\nkidney\nperiodically\n"
    "fixes\nsends\ndurable\nmazda\nallied\nthrows\nmoisture\nhungarian\nroster\nreferring\nsymantec\nspencer\n"
    "wichita\nnasdaq\nuruguay\nooo\nhz\ntransform\ntimer\ntablets\ntuning\ngotten\neducators\ntyler\n"
    "futures\nvegetable\nverse\nhighs\nhumanities\nindependently\nwanting\ncustody\nscratch\nlaunches\nipaq\nalignment\n"
    "masturbating\nhenderson\nbk\nbritannica\ncomm\nellen\ncompetitors\nnhs\nrocket\naye\nbullet\ntowers\n"
    "racks\nlace\nnasty\nvisibility\nlatitude\nconsciousness\nste\ntumor\nugly\ndeposits\nbeverly\nmistress\n"
    "encounter\ntrustees\nwatts\nduncan\nreprints\nhart\nbernard\nresolutions\nment\naccessing\nforty\ntubes\n"
    "attempted\ncol\nmidlands\npriest\nfloyd\nronald\nanalysts\nqueue\ndx\nsk\ntrance\nlocale\n"
    "nicholas\nbiol\nyu\nbundle\nhammer\ninvasion\nwitnesses\nrunner\nrows\nadministered\nnotion\nsq\n"
    "skins\nmailed\noc\nfujitsu\nspelling\narctic\nexams\nrewards\nbeneath\nstrengthen\ndefend\naj\n"
    "frederick\nmedicaid\ntreo\ninfrared\nseventh\ngods\nune\nwelsh\nbelly\naggressive\ntex\nadvertisements\n"
    "quarters\nstolen\ncia\nsublimedirectory\nsoonest\nhaiti\ndisturbed\ndetermines\nsculpture\npoly\nears\ndod\n"
    "wp\nfist\nnaturals\nneo\nmotivation\nlenders\npharmacology\nfitting\nfixtures\nbloggers\nmere\nagrees\n"
    "passengers\nquantities\npetersburg\nconsistently\npowerpoint\ncons\nsurplus\nelder\nsonic\nobituaries\ncheers\ndig\n"
    "taxi\npunishment\nappreciation\nsubsequently\nom\nbelarus\nnat\nzoning\ngravity\nprovidence\nthumb\nrestriction\n"
    "incorporate\nbackgrounds\ntreasurer\nguitars\nessence\nflooring\nlightweight\nethiopia\ntp\nmighty\nathletes\nhumanity\n"
    "transcription\njm\nholmes\ncomplications\nscholars\ndpi\nscripting\ngis\nremembered\ngalaxy\nchester\nsnapshot\n"
    "caring\nloc\nworn\nsynthetic\nshaw\nvp\nsegments\ntestament\nexpo\ndominant\ntwist\nspecifics\n"
    "itunes\nstomach\npartially\nburied\ncn\nnewbie\nminimize\ndarwin\nranks\nwilderness\ndebut\ngenerations\n"
    "tournaments\nbradley\ndeny\nanatomy\nbali\njudy\nsponsorship\nheadphones\nfraction\ntrio\nproceeding\ncube\n"
    "defects\nvolkswagen\nuncertainty\nbreakdown\nmilton\nmarker\nreconstruction\nsubsidiary\nstrengths\nclarity\nrugs\nsandra\n"
    "adelaide\nencouraging\nfurnished\nmonaco\nsettled\nfolding\nemirates\nterrorists\nairfare\ncomparisons\nbeneficial\ndistributions\n"
    "vaccine\nbelize\ncrap\nfate\nviewpicture\npromised\nvolvo\npenny\nrobust\nbookings\nthreatened\nminolta\n"
    "republicans\ndiscusses\ngui\nporter\ngras\njungle\nver\nrn\nresponded\nrim\nabstracts\nzen\n"
    "ivory\nalpine\ndis\nprediction\npharmaceuticals\nandale\nfabulous\nremix\nalias\nthesaurus\nindividually\nbattlefield\n"
    "literally\nnewer\nkay\necological\nspice\noval\nimplies\ncg\nsoma\nser\ncooler\nappraisal\n"
    "consisting\nmaritime\nperiodic\nsubmitting\noverhead\nascii\nprospect\nshipment\nbreeding\ncitations\ngeographical\ndonor\n"
    "mozambique\ntension\nhref\nbenz\ntrash\nshapes\nwifi\ntier\nfwd\nearl\nmanor\nenvelope\n"
    "diane\nhomeland\ndisclaimers\nchampionships\nexcluded\nandrea\nbreeds\nrapids\ndisco\nsheffield\nbailey\naus\n"
    "endif\nfinishing\nemotions\nwellington\nincoming\nprospects\nlexmark\ncleaners\nbulgarian\nhwy\neternal\ncashiers\n"
    "guam\ncite\naboriginal\nremarkable\nrotation\nnam\npreventing\nproductive\nboulevard\neugene\nix\ngdp\n"
    "pig\nmetric\ncompliant\nminus\npenalties\nbennett\nimagination\nhotmail\nrefurbished\njoshua\narmenia\nvaried\n"
    "grande\nclosest\nactivated\nactress\nmess\nconferencing\nassign\narmstrong\npoliticians\ntrackbacks\nlit\naccommodate\n"
    "tigers\naurora\nuna\nslides\nmilan\npremiere\nlender\nvillages\nshade\nchorus\nchristine\nrhythm\n"
    "digit\nargued\ndietary\nsymphony\nclarke\nsudden\naccepting\nprecipitation\nmarilyn\nlions\nfindlaw\nada\n"
    "pools\ntb\nlyric\nclaire\nisolation\nspeeds\nsustained\nmatched\napproximate\nrope\ncarroll\nrational\n"
    "programmer\nfighters\nchambers\ndump\ngreetings\ninherited\nwarming\nincomplete\nvocals\nchronicle\nfountain\nchubby\n"
    "grave\nlegitimate\nbiographies\nburner\nyrs\nfoo\ninvestigator\ngba\nplaintiff\nfinnish\ngentle\nbm\n"
    "prisoners\ndeeper\nmuslims\nhose\nmediterranean\nnightlife\nfootage\nhowto\nworthy\nreveals\narchitects\nsaints\n"
    "entrepreneur\ncarries\nsig\nfreelance\nduo\nexcessive\ndevon\nscreensaver\nhelena\nsaves\nregarded\nvaluation\n"
    "unexpected\ncigarette\nfog\ncharacteristic\nmarion\nlobby\negyptian\ntunisia\nmetallica\noutlined\nconsequently\nheadline\n"
    "treating\npunch\nappointments\nstr\ngotta\ncowboy\nnarrative\nbahrain\nenormous\nkarma\nconsist\nbetty\n"
    "queens\nacademics\npubs\nquantitative\nshemales\nlucas\nscreensavers\nsubdivision\ntribes\nvip\ndefeat\nclicks\n"
    "distinction\nhonduras\nnaughty\nhazards\ninsured\nharper\nlivestock\nmardi\nexemption\ntenant\nsustainability\ncabinets\n"
    "tattoo\nshake\nalgebra\nshadows\nholly\nformatting\nsilly\nnutritional\nyea\nmercy\nhartford\nfreely\n"
    "marcus\nsunrise\nwrapping\nmild\nfur\nnicaragua\nweblogs\ntimeline\ntar\nbelongs\nrj\nreadily\n"
    "affiliation\nsoc\nfence\nnudist\ninfinite\ndiana\nensures\nrelatives\nlindsay\nclan\nlegally\nshame\n"
    "satisfactory\nrevolutionary\nbracelets\nsync\ncivilian\ntelephony\nmesa\nfatal\nremedy\nrealtors\nbreathing\nbriefly\n"
    "thickness\nadjustments\ngraphical\ngenius\ndiscussing\naerospace\nfighter\nmeaningful\nflesh\nretreat\nadapted\nbarely\n"
    "wherever\nestates\nrug\ndemocrat\nborough\nmaintains\nfailing\nshortcuts\nka\nretained\nvoyeurweb\npamela\n"
    "andrews\nmarble\nextending\njesse\nspecifies\nhull\nlogitech\nsurrey\nbriefing\nbelkin\ndem\naccreditation\n"
    "wav\nblackberry\nhighland\nmeditation\nmodular\nmicrophone\nmacedonia\ncombining\nbrandon\ninstrumental\ngiants\norganizing\n"
    "shed\nballoon\nmoderators\nwinston\nmemo\nham\nsolved\ntide\nkazakhstan\nhawaiian\nstandings\npartition\n"
    "invisible\ngratuit\nconsoles\nfunk\nfbi\nqatar\nmagnet\ntranslations\nporsche\ncayman\njaguar\nreel\n"
    "sheer\ncommodity\nposing\nwang\nkilometers\nrp\nbind\nthanksgiving\nrand\nhopkins\nurgent\nguarantees\n"
    "infants\ngothic\ncylinder\nwitch\nbuck\nindication\neh\ncongratulations\ntba\ncohen\nsie\nusgs\n"
    "puppy\nkathy\nacre\ngraphs\nsurround\ncigarettes\nrevenge\nexpires\nenemies\nlows\ncontrollers\naqua\n"
    "chen\nemma\nconsultancy\nfinances\naccepts\nenjoying\nconventions\neva\npatrol\nsmell\npest\nhc\n"
    "italiano\ncoordinates\nrca\nfp\ncarnival\nroughly\nsticker\npromises\nresponding\nreef\nphysically\ndivide\n"
    "stakeholders\nhydrocodone\ngst\nconsecutive\ncornell\nsatin\nbon\ndeserve\nattempting\nmailto\npromo\njj\n"
    "representations\nchan\nworried\ntunes\ngarbage\ncompeting\ncombines\nmas\nbeth\nbradford\nlen\nphrases\n"
    "kai\npeninsula\nchelsea\nboring\nreynolds\ndom\njill\naccurately\nspeeches\nreaches\nschema\nconsiders\n"
    "sofa\ncatalogs\nministries\nvacancies\nquizzes\nparliamentary\nobj\nprefix\nlucia\nsavannah\nbarrel\ntyping\n"
    "nerve\ndans\nplanets\ndeficit\nboulder\npointing\nrenew\ncoupled\nviii\nmyanmar\nmetadata\nharold\n"
    "circuits\nfloppy\ntexture\nhandbags\njar\nev\nsomerset\nincurred\nacknowledge\nthoroughly\nantigua\nnottingham\n"
    "thunder\ntent\ncaution\nidentifies\nquestionnaire\nqualification\nlocks\nmodelling\nnamely\nminiature\ndept\nhack\n"
    "dare\neuros\ninterstate\npirates\naerial\nhawk\nconsequence\nrebel\nsystematic\nperceived\norigins\nhired\n"
    "makeup\ntextile\nlamb\nmadagascar\nnathan\ntobago\npresenting\ncos\ntroubleshooting\nuzbekistan\nindexes\npac\n"
    "rl\nerp\ncenturies\ngl\nmagnitude\nui\nrichardson\nhindu\ndh\nfragrances\nvocabulary\nlicking\n"
    "earthquake\nvpn\nfundraising\nfcc\nmarkers\nweights\nalbania\ngeological\nassessing\nlasting\nwicked\neds\n"
    "introduces\nkills\nroommate\nwebcams\npushed\nwebmasters\nro\ndf\ncomputational\nacdbentity\nparticipated\njunk\n"
    "handhelds\nwax\nlucy\nanswering\nhans\nimpressed\nslope\nreggae\nfailures\npoet\nconspiracy\nsurname\n"
    "theology\nnails\nevident\nwhats\nrides\nrehab\nepic\nsaturn\norganizer\nnut\nallergy\nsake\n"
    "twisted\ncombinations\npreceding\nmerit\nenzyme\ncumulative\nzshops\nplanes\nedmonton\ntackle\ndisks\ncondo\n"
    "pokemon\namplifier\nambien\narbitrary\nprominent\nretrieve\nlexington\nvernon\nsans\nworldcat\ntitanium\nirs\n"
    "fairy\nbuilds\ncontacted\nshaft\nlean\nbye\ncdt\nrecorders\noccasional\nleslie\ncasio\ndeutsche\n"
    "ana\npostings\ninnovations\nkitty\npostcards\ndude\ndrain\nmonte\nfires\nalgeria\nblessed\nluis\n"
    "reviewing\ncardiff\ncornwall\nfavors\npotato\npanic\nexplicitly\nsticks\nleone\ntranssexual\nez\ncitizenship\n"
    "excuse\nreforms\nbasement\nonion\nstrand\npf\nsandwich\nuw\nlawsuit\nalto\ninformative\ngirlfriend\n"
    "bloomberg\ncheque\nhierarchy\ninfluenced\nbanners\nreject\neau\nabandoned\nbd\ncircles\nitalic\nbeats\n"
    "merry\nmil\nscuba\ngore\ncomplement\ncult\ndash\npassive\nmauritius\nvalued\ncage\nchecklist\n"
    "bangbus\nrequesting\ncourage\nverde\nlauderdale\nscenarios\ngazette\nhitachi\ndivx\nextraction\nbatman\nelevation\n"
    "hearings\ncoleman\nhugh\nlap\nutilization\nbeverages\ncalibration\njake\neval\nefficiently\nanaheim\nping\n"
    "textbook\ndried\nentertaining\nprerequisite\nluther\nfrontier\nsettle\nstopping\nrefugees\nknights\nhypothesis\npalmer\n"
    "medicines\nflux\nderby\nsao\npeaceful\naltered\npontiac\nregression\ndoctrine\nscenic\ntrainers\nmuze\n"
    "enhancements\nrenewable\nintersection\npasswords\nsewing\nconsistency\ncollectors\nconclude\nrecognised\nmunich\noman\ncelebs\n"
    "gmc\npropose\nhh\nazerbaijan\nlighter\nrage\nadsl\nuh\nprix\nastrology\nadvisors\npavilion\n"
    "tactics\ntrusts\noccurring\nsupplemental\ntravelling\ntalented\nannie\npillow\ninduction\nderek\nprecisely\nshorter\n"
    "harley\nspreading\nprovinces\nrelying\nfinals\nparaguay\nsteal\nparcel\nrefined\nfd\nbo\nfifteen\n"
    "widespread\nincidence\nfears\npredict\nboutique\nacrylic\nrolled\ntuner\navon\nincidents\npeterson\nrays\n"
    "asn\nshannon\ntoddler\nenhancing\nflavor\nalike\nwalt\nhomeless\nhorrible\nhungry\nmetallic\nacne\n"
    "blocked\ninterference\nwarriors\npalestine\nlistprice\nlibs\nundo\ncadillac\natmospheric\nmalawi\nwm\npk\n"
    "sagem\nknowledgestorm\ndana\nhalo\nppm\ncurtis\nparental\nreferenced\nstrikes\nlesser\npublicity\nmarathon\n"
    "ant\nproposition\ngays\npressing\ngasoline\napt\ndressed\nscout\nbelfast\nexec\ndealt\nniagara\n"
    "inf\neos\nwarcraft\ncharms\ncatalyst\ntrader\nbucks\nallowance\nvcr\ndenial\nuri\ndesignation\n"
    "thrown\nprepaid\nraises\ngem\nduplicate\nelectro\ncriterion\nbadge\nwrist\ncivilization\nanalyzed\nvietnamese\n"
    "heath\ntremendous\nballot\nlexus\nvarying\nremedies\nvalidity\ntrustee\nmaui\nhandjobs\nweighted\nangola\n"
    "squirt\nperforms\nplastics\nrealm\ncorrected\njenny\nhelmet\nsalaries\npostcard\nelephant\nyemen\nencountered\n"
    "tsunami\nscholar\nnickel\ninternationally\nsurrounded\npsi\nbuses\nexpedia\ngeology\npct\nwb\ncreatures\n"
    "coating\ncommented\nwallet\ncleared\nsmilies\nvids\naccomplish\nboating\ndrainage\nshakira\ncorners\nbroader\n"
    "vegetarian\nrouge\nyeast\nyale\nnewfoundland\nsn\nqld\npas\nclearing\ninvestigated\ndk\nambassador\n"
    "coated\nintend\nstephanie\ncontacting\nvegetation\ndoom\nfindarticles\nlouise\nkenny\nspecially\nowen\nroutines\n"
    "hitting\nyukon\nbeings\nbite\nissn\naquatic\nreliance\nhabits\nstriking\nmyth\ninfectious\npodcasts\n"
    "singh\ngig\ngilbert\nsas\nferrari\ncontinuity\nbrook\nfu\noutputs\nphenomenon\nensemble\ninsulin\n"
    "assured\nbiblical\nweed\nconscious\naccent\nmysimon\neleven\nwives\nambient\nutilize\nmileage\noecd\n"
    "prostate\nadaptor\nauburn\nunlock\nhyundai\npledge\nvampire\nangela\nrelates\nnitrogen\nxerox\ndice\n"
    "merger\nsoftball\nreferrals\nquad\ndock\ndifferently\nfirewire\nmods\nnextel\nframing\norganised\nmusician\n"
    "blocking\nrwanda\nsorts\nintegrating\nvsnet\nlimiting\ndispatch\nrevisions\npapua\nrestored\nhint\narmor\n"
    "riders\nchargers\nremark\ndozens\nvaries\nmsie\nreasoning\nwn\nliz\nrendered\npicking\ncharitable\n"
    "guards\nannotated\nccd\nsv\nconvinced\nopenings\nbuys\nburlington\nreplacing\nresearcher\nwatershed\ncouncils\n"
    "occupations\nacknowledged\nnudity\nkruger\npockets\ngranny\npork\nzu\nequilibrium\nviral\ninquire\npipes\n"
    "characterized\nladen\naruba\ncottages\nrealtor\nmerge\nprivilege\nedgar\ndevelops\nqualifying\nchassis\ndubai\n"
    "estimation\nbarn\npushing\nllp\nfleece\npediatric\nboc\nfare\ndg\nasus\npierce\nallan\n"
    "dressing\ntechrepublic\nsperm\nvg\nbald\nfilme\ncraps\nfuji\nfrost\nleon\ninstitutes\nmold\n"
    "dame\nfo\nsally\nyacht\ntracy\nprefers\ndrilling\nbrochures\nherb\ntmp\nalot\nate\n"
    "breach\nwhale\ntraveller\nappropriations\nsuspected\ntomatoes\nbenchmark\nbeginners\ninstructors\nhighlighted\nbedford\nstationery\n"
    "idle\nmustang\nunauthorized\nclusters\nantibody\ncompetent\nmomentum\nfin\nwiring\nio\npastor\nmud\n"
    "calvin\nuni\nshark\ncontributor\ndemonstrates\nphases\ngrateful\nemerald\ngradually\nlaughing\ngrows\ncliff\n"
    "desirable\ntract\nul\nballet\nol\njournalist\nabraham\njs\nbumper\nafterwards\nwebpage\nreligions\n"
    "garlic\nhostels\nshine\nsenegal\nexplosion\npn\nbanned\nwendy\nbriefs\nsignatures\ndiffs\ncove\n"
    "mumbai\nozone\ndisciplines\ncasa\nmu\ndaughters\nconversations\nradios\ntariff\nnvidia\nopponent\npasta\n"
    "simplified\nmuscles\nserum\nwrapped\nswift\nmotherboard\nruntime\ninbox\nfocal\nbibliographic\nvagina\neden\n"
    "distant\nincl\nchampagne\nala\ndecimal\nhq\ndeviation\nsuperintendent\npropecia\ndip\nnbc\nsamba\n"
    "hostel\nhousewives\nemploy\nmongolia\npenguin\nmagical\ninfluences\ninspections\nirrigation\nmiracle\nmanually\nreprint\n"
    "reid\nwt\nhydraulic\ncentered\nrobertson\nflex\nyearly\npenetration\nwound\nbelle\nrosa\nconviction\n"
    "hash\nomissions\nwritings\nhamburg\nlazy\nmv\nmpg\nretrieval\nqualities\ncindy\nlolita\nfathers\n"
    "carb\ncharging\ncas\nmarvel\nlined\ncio\ndow\nprototype\nimportantly\nrb\npetite\napparatus\n"
    "upc\nterrain\ndui\npens\nexplaining\nyen\nstrips\ngossip\nrangers\nnomination\nempirical\nmh\n"
    "rotary\nworm\ndependence\ndiscrete\nbeginner\nboxed\nlid\nsexuality\npolyester\ncubic\ndeaf\ncommitments\n"
    "suggesting\nsapphire\nkinase\nskirts\nmats\nremainder\ncrawford\nlabeled\nprivileges\ntelevisions\nspecializing\nmarking\n"
    "commodities\npvc\nserbia\nsheriff\ngriffin\ndeclined\nguyana\nspies\nblah\nmime\nneighbor\nmotorcycles\n"
    "elect\nhighways\nthinkpad\nconcentrate\nintimate\nreproductive\npreston\ndeadly\ncunt\nfeof\nbunny\nchevy\n"
    "molecules\nrounds\nlongest\nrefrigerator\ntions\nintervals\nsentences\ndentists\nusda\nexclusion\nworkstation\nholocaust\n"
    "keen\nflyer\npeas\ndosage\nreceivers\nurls\ncustomise\ndisposition\nvariance\nnavigator\ninvestigators\ncameroon\n"
    "baking\nmarijuana\nadaptive\ncomputed\nneedle\nbaths\nenb\ngg\ncathedral\nbrakes\nog\nnirvana\n"
    "ko\nfairfield\nowns\ntil\ninvision\nsticky\ndestiny\ngenerous\nmadness\nemacs\nclimb\nblowing\n"
    "fascinating\nlandscapes\nheated\nlafayette\njackie\nwto\ncomputation\nhay\ncardiovascular\nww\nsparc\ncardiac\n"
    "salvation\ndover\nadrian\npredictions\naccompanying\nvatican\nbrutal\nlearners\ngd\nselective\narbitration\nconfiguring\n"
    "token\neditorials\nzinc\nsacrifice\nseekers\nguru\nisa\nremovable\nconvergence\nyields\ngibraltar\nlevy\n"
    "suited\nnumeric\nanthropology\nskating\nkinda\naberdeen\nemperor\ngrad\nmalpractice\ndylan\nbras\nbelts\n"
    "blacks\neducated\nrebates\nreporters\nburke\nproudly\npix\nnecessity\nrendering\nmic\ninserted\npulling\n"
    "basename\nkyle\nobesity\ncurves\nsuburban\ntouring\nclara\nvertex\nbw\nhepatitis\nnationally\ntomato\n"
    "andorra\nwaterproof\nexpired\nmj\ntravels\nflush\nwaiver\npale\nspecialties\nhayes\nhumanitarian\ninvitations\n"
    "functioning\ndelight\nsurvivor\ngarcia\ncingular\neconomies\nalexandria\nbacterial\nmoses\ncounted\nundertake\ndeclare\n"
    "continuously\njohns\nvalves\ngaps\nimpaired\nachievements\ndonors\ntear\njewel\nteddy\nlf\nconvertible\n"
    "ata\nteaches\nventures\nnil\nbufing\nstranger\ntragedy\njulian\nnest\npam\ndryer\npainful\n"
    "velvet\ntribunal\nruled\nnato\npensions\nprayers\nfunky\nsecretariat\nnowhere\ncop\nparagraphs\ngale\n"
    "joins\nadolescent\nnominations\nwesley\ndim\nlately\ncancelled\nscary\nmattress\nmpegs\nbrunei\nlikewise\n"
    "banana\nintroductory\nslovak\ncakes\nstan\nreservoir\noccurrence\nidol\nbloody\nmixer\nremind\nwc\n"
    "worcester\nsbjct\ndemographic\ncharming\nmai\ntooth\ndisciplinary\nannoying\nrespected\nstays\ndisclose\naffair\n"
    "drove\nwasher\nupset\nrestrict\nspringer\nbeside\nmines\nportraits\nrebound\nlogan\nmentor\ninterpreted\n"
    "evaluations\nfought\nbaghdad\nelimination\nmetres\nhypothetical\nimmigrants\ncomplimentary\nhelicopter\npencil\nfreeze\nhk\n"
    "performer\nabu\ntitled\ncommissions\nsphere\npowerseller\nmoss\nratios\nconcord\ngraduated\nendorsed\nty\n"
    "surprising\nwalnut\nlance\nladder\nitalia\nunnecessary\ndramatically\nliberia\nsherman\ncork\nmaximize\ncj\n"
    "hansen\nsenators\nworkout\nmali\nyugoslavia\nbleeding\ncharacterization\ncolon\nlikelihood\nlanes\npurse\nfundamentals\n"
    "contamination\nmtv\nendangered\ncompromise\nmasturbation\noptimize\nstating\ndome\ncaroline\nleu\nexpiration\nnamespace\n"
    "align\nperipheral\nbless\nengaging\nnegotiation\ncrest\nopponents\ntriumph\nnominated\nconfidentiality\nelectoral\nchangelog\n"
    "welding\norgasm\ndeferred\nalternatively\nheel\nalloy\ncondos\nplots\npolished\nyang\ngently\ngreensboro\n"
    "tulsa\nlocking\ncasey\ncontroversial\ndraws\nfridge\nblanket\nbloom\nqc\nsimpsons\nlou\nelliott\n"
    "recovered\nfraser\njustify\nupgrading\nblades\npgp\nloops\nsurge\nfrontpage\ntrauma\naw\ntahoe\n"
    "advert\npossess\ndemanding\ndefensive\nsip\nflashers\nsubaru\nforbidden\ntf\nvanilla\nprogrammers\npj\n"
    "monitored\ninstallations\ndeutschland\npicnic\nsouls\narrivals\nspank\ncw\npractitioner\nmotivated\nwr\ndumb\n"
    "smithsonian\nhollow\nvault\nsecurely\nexamining\nfioricet\ngroove\nrevelation\nrg\npursuit\ndelegation\nwires\n"
    "bl\ndictionaries\nmails\nbacking\ngreenhouse\nsleeps\nvc\nblake\ntransparency\ndee\ntravis\nwx\n"
    "endless\nfigured\norbit\ncurrencies\nniger\nbacon\nsurvivors\npositioning\nheater\ncolony\ncannon\ncircus\n"
    "promoted\nforbes\nmae\nmoldova\nmel\ndescending\npaxil\nspine\ntrout\nenclosed\nfeat\ntemporarily\n"
    "ntsc\ncooked\nthriller\ntransmit\napnic\nfatty\ngerald\npressed\nfrequencies\nscanned\nreflections\nhunger\n"
    "mariah\nsic\nmunicipality\nusps\njoyce\ndetective\nsurgeon\ncement\nexperiencing\nfireplace\nendorsement\nbg\n"
    "planners\ndisputes\ntextiles\nmissile\nintranet\ncloses\nseq\npsychiatry\npersistent\ndeborah\nconf\nmarco\n"
    "assists\nsummaries\nglow\ngabriel\nauditor\nwma\naquarium\nviolin\nprophet\ncir\nbracket\nlooksmart\n"
    "isaac\noxide\noaks\nmagnificent\nerik\ncolleague\nnaples\npromptly\nmodems\nadaptation\nhu\nharmful\n"
    "paintball\nprozac\nsexually\nenclosure\nacm\ndividend\nnewark\nkw\npaso\nglucose\nphantom\nnorm\n"
    "playback\nsupervisors\nwestminster\nturtle\nips\ndistances\nabsorption\ntreasures\ndsc\nwarned\nneural\nware\n"
    "fossil\nmia\nhometown\nbadly\ntranscripts\napollo\nwan\ndisappointed\npersian\ncontinually\ncommunist\ncollectible\n"
    "handmade\ngreene\nentrepreneurs\nrobots\ngrenada\ncreations\njade\nscoop\nacquisitions\nfoul\nkeno\ngtk\n"
    "earning\nmailman\nsanyo\nnested\nbiodiversity\nexcitement\nsomalia\nmovers\nverbal\nblink\npresently\nseas\n"
    "carlo\nworkflow\nmysterious\nnovelty\nbryant\ntiles\nvoyuer\nlibrarian\nsubsidiaries\nswitched\nstockholm\ntamil\n"
    "garmin\nru\npose\nfuzzy\nindonesian\ngrams\ntherapist\nrichards\nmrna\nbudgets\ntoolkit\npromising\n"
    "relaxation\ngoat\nrender\ncarmen\nira\nsen\nthereafter\nhardwood\nerotica\ntemporal\nsail\nforge\n"
    "commissioners\ndense\ndts\nbrave\nforwarding\nqt\nawful\nnightmare\nairplane\nreductions\nsouthampton\nistanbul\n"
    "impose\norganisms\nsega\ntelescope\nviewers\nasbestos\nportsmouth\ncdna\nmeyer\nenters\npod\nsavage\n"
    "advancement\nwu\nharassment\nwillow\nresumes\nbolt\ngage\nthrowing\nexisted\nwhore\ngenerators\nlu\n"
    "wagon\nbarbie\ndat\nfavour\nsoa\nknock\nurge\nsmtp\ngenerates\npotatoes\nthorough\nreplication\n"
    "inexpensive\nkurt\nreceptors\npeers\nroland\noptimum\nneon\ninterventions\nquilt\nhuntington\ncreature\nours\n"
    "mounts\nsyracuse\ninternship\nlone\nrefresh\naluminium\nsnowboard\nbeastality\nwebcast\nmichel\nevanescence\nsubtle\n"
    "coordinated\nnotre\nshipments\nmaldives\nstripes\nfirmware\nantarctica\ncope\nshepherd\nlm\ncanberra\ncradle\n"
    "chancellor\nmambo\nlime\nkirk\nflour\ncontroversy\nlegendary\nbool\nsympathy\nchoir\navoiding\nbeautifully\n"
    "blond\nexpects\ncho\njumping\nfabrics\nantibodies\npolymer\nhygiene\nwit\npoultry\nvirtue\nburst\n"
    "examinations\nsurgeons\nbouquet\nimmunology\npromotes\nmandate\nwiley\ndepartmental\nbbs\nspas\nind\ncorpus\n"
    "johnston\nterminology\ngentleman\nfibre\nreproduce\nconvicted\nshades\njets\nindices\nroommates\nadware\nqui\n"
    "intl\nthreatening\nspokesman\nzoloft\nactivists\nfrankfurt\nprisoner\ndaisy\nhalifax\nencourages\nultram\ncursor\n"
    "assembled\nearliest\ndonated\nstuffed\nrestructuring\ninsects\nterminals\ncrude\nmorrison\nmaiden\nsimulations\ncz\n"
    "sufficiently\nexamines\nviking\nmyrtle\nbored\ncleanup\nyarn\nknit\nconditional\nmug\ncrossword\nbother\n"
    "budapest\nconceptual\nknitting\nattacked\nhl\nbhutan\nliechtenstein\nmating\ncompute\nredhead\narrives\ntranslator\n"
    "automobiles\ntractor\nallah\ncontinent\nob\nunwrap\nfares\nlongitude\nresist\nchallenged\ntelecharger\nhoped\n"
    "pike\nsafer\ninsertion\ninstrumentation\nids\nhugo\nwagner\nconstraint\ngroundwater\ntouched\nstrengthening\ncologne\n"
    "gzip\nwishing\nranger\nsmallest\ninsulation\nnewman\nmarsh\nricky\nctrl\nscared\ntheta\ninfringement\n"
    "bent\nlaos\nsubjective\nmonsters\nasylum\nlightbox\nrobbie\nstake\ncocktail\noutlets\nswaziland\nvarieties\n"
    "arbor\nmediawiki\nconfigurations\npoison\n"
;

}  // namespace docsmell::detail
